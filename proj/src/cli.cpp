#include "frs/cli.hpp"

#include "frs/bounds.hpp"
#include "frs/code.hpp"
#include "frs/decoder.hpp"
#include "frs/errors.hpp"
#include "frs/experiment.hpp"
#include "frs/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace frs::cli {

namespace {

// "-" designates the process streams instead of a file.
std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

FrsParams load_params(const std::string& path, std::istream& in) {
    std::istringstream text(slurp(path, in));
    return read_params(text);
}

FoldedWord load_word(const std::string& path, std::istream& in, const FrsParams& params) {
    std::istringstream text(slurp(path, in));
    return read_word(text, params);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
    file << text;
}

struct Options {
    std::string params_path;
    std::string word_path = "-";
    std::string message;
    std::string config_path;
    std::string out_path;
    std::string radius;
    std::string rate;
    std::size_t k = 1;
    std::size_t m = 1;
    std::size_t d = 1;
    std::size_t errors = 0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t limit = kDefaultPruneLimit;
    bool csv = false;
};

int cmd_encode(const Options& opt, std::istream& in, std::ostream& out) {
    const FrsParams params = load_params(opt.params_path, in);
    const Poly f = parse_poly(params.field(), opt.message);
    std::ostringstream text;
    write_word(text, encode(params, f));
    emit(text.str(), opt.out_path, out);
    return 0;
}

int cmd_decode(const Options& opt, std::istream& in, std::ostream& out) {
    const FrsParams params = load_params(opt.params_path, in);
    const FoldedWord g = load_word(opt.word_path, in, params);
    std::optional<Rational> radius;
    if (!opt.radius.empty()) radius = parse_rational(opt.radius);

    const DecodeOutcome outcome = decode(params, opt.k, g, radius, opt.limit);
    std::ostringstream text;
    text << "radius " << to_string(outcome.radius) << "\n";
    if (outcome.subspace) {
        text << "subspace_dim " << outcome.subspace->dim() << "\n";
        text << "offset " << to_string(outcome.subspace->offset()) << "\n";
        for (const Poly& h : outcome.subspace->basis()) text << "basis " << to_string(h) << "\n";
    } else {
        text << "subspace_dim -1\n";
    }
    text << "strategy " << outcome.stats.strategy << "\n";
    text << "candidates_examined " << outcome.stats.candidates_examined << "\n";
    text << "list_size " << outcome.list.size() << "\n";
    for (const Poly& f : outcome.list) text << "member " << to_string(f) << "\n";
    const std::uint64_t bound = frs_list_bound(opt.k);
    text << "list_bound " << bound << "\n";
    text << "bound_ok " << (outcome.list.size() <= bound ? 1 : 0) << "\n";
    emit(text.str(), opt.out_path, out);
    return outcome.list.size() <= bound ? 0 : 2;
}

int cmd_corrupt(const Options& opt, std::istream& in, std::ostream& out) {
    const FrsParams params = load_params(opt.params_path, in);
    const FoldedWord w = load_word(opt.word_path, in, params);
    std::ostringstream text;
    write_word(text, corrupt(params, w, opt.errors, opt.seed));
    emit(text.str(), opt.out_path, out);
    return 0;
}

int cmd_experiment(const Options& opt, std::istream& in, std::ostream& out) {
    const ExperimentConfig config = ExperimentConfig::parse(slurp(opt.config_path, in));
    const ExperimentResult result = run_experiment(config);
    const std::string& target = !opt.out_path.empty() ? opt.out_path : config.out;
    emit(result.csv, target, out);
    return result.all_pass ? 0 : 2;
}

int cmd_bounds(const Options& opt, std::ostream& out) {
    const Rational rate = parse_rational(opt.rate);
    const BoundReport report = bound_report(opt.m, opt.k, rate, opt.d);
    emit(opt.csv ? to_csv(report) : to_text(report), opt.out_path, out);
    return 0;
}

int cmd_verify(std::ostream& out) {
    const std::vector<CheckResult> results = run_all_checks(&out);
    bool all = true;
    for (const CheckResult& r : results) all = all && r.pass;
    out << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    return all ? 0 : 2;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"folded Reed-Solomon encoder, list decoder and experiment harness"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* enc = app.add_subcommand("encode", "encode a message polynomial");
    enc->add_option("--params", opt.params_path, "parameters file: q gamma m n msg_len")->required();
    enc->add_option("--message", opt.message, "coefficients, lowest degree first, e.g. \"0 1\"")->required();
    enc->add_option("--out", opt.out_path, "output file (default stdout)");

    CLI::App* dec = app.add_subcommand("decode", "list-decode a received word");
    dec->add_option("--params", opt.params_path, "parameters file")->required();
    dec->add_option("--k", opt.k, "window parameter, 1 <= k <= m")->required();
    dec->add_option("--word", opt.word_path, "received word file, - for stdin");
    dec->add_option("--radius", opt.radius, "decoding radius as a/b (default: certified radius)");
    dec->add_option("--limit", opt.limit, "enumeration cap for pruning");
    dec->add_option("--out", opt.out_path, "output file (default stdout)");

    CLI::App* cor = app.add_subcommand("corrupt", "corrupt exactly e folded symbols");
    cor->add_option("--params", opt.params_path, "parameters file")->required();
    cor->add_option("--word", opt.word_path, "word file, - for stdin");
    cor->add_option("--errors", opt.errors, "number of symbols to corrupt")->required();
    cor->add_option("--seed", opt.seed, "random seed");
    cor->add_option("--out", opt.out_path, "output file (default stdout)");

    CLI::App* exp = app.add_subcommand("experiment", "run a trial suite from a config file");
    exp->add_option("--config", opt.config_path, "key=value config file, - for stdin")->required();
    exp->add_option("--out", opt.out_path, "CSV output file (default stdout, overrides config)");

    CLI::App* bnd = app.add_subcommand("bounds", "print radius and list-size bounds");
    bnd->add_option("--m", opt.m, "folding parameter")->required();
    bnd->add_option("--k", opt.k, "window parameter")->required();
    bnd->add_option("--rate", opt.rate, "code rate as a/b")->required();
    bnd->add_option("--d", opt.d, "subspace dimension for the affine bound");
    bnd->add_flag("--csv", opt.csv, "CSV instead of aligned text");
    bnd->add_option("--out", opt.out_path, "output file (default stdout)");

    CLI::App* ver = app.add_subcommand("verify", "run the full verification suite");
    (void)ver;

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("frs");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (enc->parsed()) return cmd_encode(opt, in, out);
        if (dec->parsed()) return cmd_decode(opt, in, out);
        if (cor->parsed()) return cmd_corrupt(opt, in, out);
        if (exp->parsed()) return cmd_experiment(opt, in, out);
        if (bnd->parsed()) return cmd_bounds(opt, out);
        if (ver->parsed()) return cmd_verify(out);
    } catch (const ContractViolation& e) {
        err << "contract violation: " << e.what() << "\n";
        return 2;
    } catch (const LimitExceeded& e) {
        err << "limit exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 1;
}

} // namespace frs::cli
