// valpred: valid prediction sets and plausibilities for poll-based forecasts.
//
// Exit codes: 0 success, 2 input error, 3 domain error, 4 enumeration-size error.

#include "valpred/errors.hpp"
#include "valpred/kernels.hpp"
#include "valpred/nonresponse.hpp"
#include "valpred/outcome_model.hpp"
#include "valpred/plausibility.hpp"
#include "valpred/prediction.hpp"
#include "valpred/report.hpp"
#include "valpred/validity.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

enum ExitCode : int { kOk = 0, kInputError = 2, kDomainError = 3, kSizeError = 4 };

struct Options {
    std::string poll_path;
    std::string target = "T";
    double lambda = 10.0;
    double alpha = 0.05;
    std::size_t grid_size = 2;
    std::uint64_t seed = 0;
    std::uint64_t trials = 100000;
    std::int64_t n = 1000;
    std::string kind = "logistic";
    std::string alpha_grid = "0.001:0.999:512";
    bool uninformative = false;
    bool check_validity = false;
    std::string out;
};

void emit(const Options& opt, const std::string& text)
{
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) {
        throw valpred::InputError("cannot write '" + opt.out + "'");
    }
    f << text;
}

std::string dump(const valpred::Json& j)
{
    return j.dump(2) + "\n";
}

valpred::Json distribution_json(const valpred::PredictiveDistribution& pi)
{
    valpred::Json out = valpred::Json::object();
    for (std::size_t i = 0; i < pi.space().size(); ++i) {
        out[pi.space().label(i)] = pi[i];
    }
    return out;
}

valpred::JointModel poll_model(const Options& opt)
{
    if (opt.n < 1) {
        throw valpred::DomainError("poll size n must be at least 1");
    }
    valpred::check_enumerable(static_cast<std::size_t>(opt.n + 1) * 2);
    if (opt.uninformative) {
        return valpred::uninformative_joint(opt.n);
    }
    return valpred::binomial_flat_joint({opt.lambda, opt.n});
}

// "first:last:count"
std::vector<double> parse_alpha_grid(const std::string& spec)
{
    std::stringstream ss(spec);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c) ) {
        throw valpred::InputError("alpha grid must look like first:last:count");
    }
    try {
        std::size_t used = 0;
        const double first = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(a);
        const double last = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(b);
        const long count = std::stol(c, &used);
        if (used != c.size() || count < 2) throw std::invalid_argument(c);
        return valpred::alpha_grid(first, last, static_cast<std::size_t>(count));
    } catch (const std::invalid_argument&) {
        throw valpred::InputError("alpha grid must look like first:last:count");
    } catch (const std::out_of_range&) {
        throw valpred::InputError("alpha grid value out of range");
    }
}

void cmd_predict(const Options& opt)
{
    const auto poll = valpred::load_poll(opt.poll_path);
    valpred::check_alpha(opt.alpha);
    const valpred::LogisticRuleParams params{opt.lambda, poll.n};
    const double theta = valpred::naive_mar_theta(poll, opt.target);
    const auto pi = valpred::naive_mar_rule(poll, params, opt.target);
    const auto set = valpred::prediction_set(pi, opt.alpha);

    valpred::Json j;
    j["poll"] = valpred::to_json(poll);
    j["lambda"] = opt.lambda;
    j["alpha"] = opt.alpha;
    j["target"] = opt.target;
    j["theta_hat"] = theta;
    j["probabilities"] = distribution_json(pi);
    j["prediction_set"] = valpred::to_json(set);
    j["too_close_to_call"] = !set.singleton();
    j["empty_set_warning"] = set.empty();
    emit(opt, dump(j));
}

void cmd_plaus(const Options& opt)
{
    const auto poll = valpred::load_poll(opt.poll_path);
    valpred::check_alpha(opt.alpha);
    const valpred::LogisticRuleParams params{opt.lambda, poll.n};
    const auto ensemble = valpred::imputation_ensemble(poll, params, opt.grid_size, opt.target);
    const auto x = valpred::observed_data_value(poll, opt.target);
    const auto assignment = valpred::plausibility_assignment(ensemble, x);
    const auto set = valpred::plausibility_prediction_set(ensemble, x, opt.alpha);
    const auto thetas = valpred::imputation_thetas(poll, 2, opt.target);

    const auto mar = valpred::naive_mar_rule(poll, params, opt.target);

    valpred::Json j;
    j["poll"] = valpred::to_json(poll);
    j["lambda"] = opt.lambda;
    j["alpha"] = opt.alpha;
    j["target"] = opt.target;
    j["observed_x"] = x;
    j["theta_hat_range"] = {thetas.front(), thetas.back()};
    j["plausibility"] = valpred::to_json(assignment);
    j["plausibility_prediction_set"] = valpred::to_json(set);
    j["too_close_to_call"] = !set.singleton();
    j["empty_set_warning"] = set.empty();
    j["naive_mar"] = {{"theta_hat", valpred::naive_mar_theta(poll, opt.target)},
                      {"probabilities", distribution_json(mar)},
                      {"prediction_set", valpred::to_json(valpred::prediction_set(mar, opt.alpha))}};
    if (opt.check_validity) {
        const auto report = valpred::check_ensemble_validity(ensemble, opt.alpha);
        auto v = valpred::to_json(report);
        v["grid_size"] = opt.grid_size;
        // Only a member-wise hypothesis check licenses a validity claim.
        v["validity_claimed"] = report.hypothesis_holds && report.holds;
        j["ensemble_validity"] = v;
    }
    emit(opt, dump(j));
}

void cmd_curve(const Options& opt)
{
    std::ostringstream os;
    if (opt.kind == "logistic") {
        valpred::LogisticRuleParams{opt.lambda, 1}.validate();
        valpred::write_logistic_tsv(os, opt.lambda);
    } else if (opt.kind == "miscoverage") {
        valpred::write_curve_tsv(os, valpred::miscoverage_cdf(poll_model(opt)));
    } else {
        throw valpred::InputError("unknown curve kind '" + opt.kind + "'");
    }
    emit(opt, os.str());
}

void cmd_validity(const Options& opt)
{
    const auto grid = parse_alpha_grid(opt.alpha_grid);
    const auto model = poll_model(opt);
    auto j = valpred::to_json(valpred::check_validity(model, grid));
    j["n"] = opt.n;
    j["lambda"] = opt.lambda;
    j["uninformative"] = opt.uninformative;
    emit(opt, dump(j));
}

void cmd_mc(const Options& opt)
{
    const auto model = poll_model(opt);
    const auto est = valpred::monte_carlo_miscoverage(model, opt.alpha, opt.trials, opt.seed);
    auto j = valpred::to_json(est);
    j["exact"] = valpred::prediction_set_miscoverage(model, opt.alpha);
    j["n"] = opt.n;
    j["lambda"] = opt.lambda;
    j["alpha"] = opt.alpha;
    j["seed"] = opt.seed;
    j["uninformative"] = opt.uninformative;
    emit(opt, dump(j));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Valid prediction sets and plausibilities for poll-based forecasts"};
    app.require_subcommand(1);
    Options opt;

    auto add_model_flags = [&](CLI::App* sub) {
        sub->add_option("--n", opt.n, "Poll size n")->capture_default_str();
        sub->add_option("--lambda", opt.lambda, "Logistic sharpness")->capture_default_str();
        sub->add_flag("--uninformative", opt.uninformative, "Use pi_x = (1/2, 1/2) for every x");
    };

    auto* predict = app.add_subcommand("predict", "Prediction set from a poll (missing at random)");
    predict->add_option("--poll", opt.poll_path, "Poll JSON file")->required();
    predict->add_option("--lambda", opt.lambda, "Logistic sharpness")->capture_default_str();
    predict->add_option("--alpha", opt.alpha, "Prediction set level")->capture_default_str();
    predict->add_option("--target", opt.target, "Label theta_hat refers to")->capture_default_str();

    auto* plaus = app.add_subcommand("plaus", "Upper/lower probabilities over nonresponse imputations");
    plaus->add_option("--poll", opt.poll_path, "Poll JSON file")->required();
    plaus->add_option("--lambda", opt.lambda, "Logistic sharpness")->capture_default_str();
    plaus->add_option("--alpha", opt.alpha, "Prediction set level")->capture_default_str();
    plaus->add_option("--grid-size", opt.grid_size, "Imputation grid size (>= 2)")->capture_default_str();
    plaus->add_option("--target", opt.target, "Label theta_hat refers to")->capture_default_str();
    plaus->add_flag("--check-validity", opt.check_validity, "Check member-wise validity of the plausibility set");

    auto* curve = app.add_subcommand("curve", "Plot data as two-column TSV");
    curve->add_option("--kind", opt.kind, "logistic or miscoverage")->capture_default_str();
    add_model_flags(curve);

    auto* validity = app.add_subcommand("validity", "Exact validity report over an alpha grid");
    validity->add_option("--alpha-grid", opt.alpha_grid, "first:last:count")->capture_default_str();
    add_model_flags(validity);

    auto* mc = app.add_subcommand("mc", "Monte Carlo miscoverage estimate");
    mc->add_option("--alpha", opt.alpha, "Prediction set level")->capture_default_str();
    mc->add_option("--trials", opt.trials, "Number of trials")->capture_default_str();
    mc->add_option("--seed", opt.seed, "Generator seed")->capture_default_str();
    add_model_flags(mc);

    for (auto* sub : {predict, plaus, curve, validity, mc}) {
        sub->add_option("--out", opt.out, "Write output to this file");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*predict) cmd_predict(opt);
        else if (*plaus) cmd_plaus(opt);
        else if (*curve) cmd_curve(opt);
        else if (*validity) cmd_validity(opt);
        else if (*mc) cmd_mc(opt);
    } catch (const valpred::EnumerationSizeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kSizeError;
    } catch (const valpred::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const valpred::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
