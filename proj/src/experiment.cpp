#include "frs/experiment.hpp"

#include "frs/bounds.hpp"
#include "frs/oracle.hpp"
#include "frs/rng.hpp"
#include "frs/sampling.hpp"
#include "frs/wronskian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frs {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    std::uint64_t v;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: key '" + key + "': not a number: '" + value + "'");
    }
    if (used != value.size())
        throw std::invalid_argument("config: key '" + key + "': trailing characters in '" + value + "'");
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw std::invalid_argument("config: key '" + key + "': expected true/false, got '" + value + "'");
}

} // namespace

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
    ExperimentConfig c;
    bool have_q = false, have_gamma = false, have_m = false, have_n = false, have_msg = false, have_k = false;

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config: line " + std::to_string(line_no) + ": empty key or value");

        if (key == "q") {
            c.q = parse_u64(key, value);
            have_q = true;
        } else if (key == "gamma") {
            c.gamma = parse_u64(key, value);
            have_gamma = true;
        } else if (key == "m") {
            c.m = parse_u64(key, value);
            have_m = true;
        } else if (key == "n") {
            c.n = parse_u64(key, value);
            have_n = true;
        } else if (key == "msg_len") {
            c.msg_len = parse_u64(key, value);
            have_msg = true;
        } else if (key == "k") {
            c.k = parse_u64(key, value);
            have_k = true;
        } else if (key == "trials") {
            c.trials = parse_u64(key, value);
        } else if (key == "seed") {
            c.seed = parse_u64(key, value);
        } else if (key == "channel") {
            if (value != "random" && value != "adversarial")
                throw std::invalid_argument("config: channel must be 'random' or 'adversarial'");
            c.channel = value;
        } else if (key == "errors") {
            c.errors = parse_u64(key, value);
        } else if (key == "radius") {
            c.radius = parse_rational(value);
        } else if (key == "oracle") {
            c.oracle = parse_bool(key, value);
        } else if (key == "limit") {
            c.limit = parse_u64(key, value);
        } else if (key == "targets") {
            c.targets = parse_u64(key, value);
        } else if (key == "adversarial_dim") {
            c.adversarial_dim = parse_u64(key, value);
        } else if (key == "out") {
            c.out = value;
        } else if (key == "fault_injection") {
            if (value != "none" && value != "oversized_list")
                throw std::invalid_argument("config: fault_injection must be 'none' or 'oversized_list'");
            c.fault_injection = value;
        } else {
            throw std::invalid_argument("config: line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }

    if (!have_q || !have_gamma || !have_m || !have_n || !have_msg || !have_k)
        throw std::invalid_argument("config: q, gamma, m, n, msg_len and k are all required");
    c.make_params(); // re-validate the code parameters eagerly
    if (c.k < 1 || c.k > c.m) throw std::invalid_argument("config: need 1 <= k <= m");
    const std::size_t N = c.n / c.m;
    if (c.errors > N) throw std::invalid_argument("config: errors exceeds folded blocklength");
    if (c.channel == "adversarial") {
        if (c.targets < 1 || c.targets > N)
            throw std::invalid_argument("config: targets must be in [1, N] for the adversarial channel");
        if (c.adversarial_dim > c.msg_len)
            throw std::invalid_argument("config: adversarial_dim cannot exceed msg_len");
        std::uint64_t members = 1; // q^adversarial_dim, capped at targets
        for (std::size_t i = 0; i < c.adversarial_dim && members < c.targets; ++i) members *= c.q;
        if (c.targets > members)
            throw std::invalid_argument("config: more targets than the adversarial subspace has members");
    }
    return c;
}

FrsParams ExperimentConfig::make_params() const { return FrsParams(PrimeField(q, gamma), m, n, msg_len); }

std::string TrialRecord::csv_row() const {
    std::ostringstream out;
    out << label << ',' << errors << ',' << subspace_dim << ',' << list_size << ',' << oracle_list_size << ','
        << deficit_sum << ',' << radius_num << ',' << radius_den << ',' << (pass ? 1 : 0);
    return out.str();
}

namespace {

// For the adversarial channel: `count` distinct members of H.
std::vector<Poly> draw_targets(const AffineSubspace& h, std::size_t count, Rng& rng) {
    std::vector<Poly> targets;
    while (targets.size() < count) {
        std::vector<Fe> alphas(h.dim());
        for (Fe& a : alphas) a = rng.element(h.field());
        Poly cand = h.member(alphas);
        const bool fresh = std::none_of(targets.begin(), targets.end(), [&](const Poly& t) { return t == cand; });
        if (fresh) targets.push_back(std::move(cand));
    }
    return targets;
}

TrialRecord run_trial(const ExperimentConfig& cfg, const FrsParams& params, const Rng& root, std::uint64_t trial) {
    Rng rng = root.child(trial);
    TrialRecord rec;
    rec.label = std::to_string(trial);

    FoldedWord g = encode(params, Poly::zero(params.field())); // placeholder shape
    if (cfg.channel == "random") {
        const Poly f = random_poly(params.field(), params.msg_len(), rng);
        g = corrupt(params, encode(params, f), cfg.errors, rng.next());
        rec.errors = static_cast<std::int64_t>(cfg.errors);
    } else {
        const AffineSubspace h = random_subspace(params.field(), params.msg_len(), cfg.adversarial_dim, rng);
        const std::vector<Poly> targets = draw_targets(h, cfg.targets, rng);
        g = adversarial_center(params, h, targets, rng.next());
        std::size_t best = 0;
        for (const Poly& t : targets) best = std::max(best, agreement_count(encode(params, t), g));
        rec.errors = static_cast<std::int64_t>(params.folded_length() - best);
    }

    const DecodeOutcome outcome = decode(params, cfg.k, g, cfg.radius, cfg.limit);
    rec.list_size = static_cast<std::int64_t>(outcome.list.size());
    rec.radius_num = outcome.radius.numerator();
    rec.radius_den = outcome.radius.denominator();

    bool pass = outcome.list.size() <= frs_list_bound(cfg.k);
    if (outcome.subspace) {
        rec.subspace_dim = static_cast<std::int64_t>(outcome.subspace->dim());
        pass = pass && outcome.subspace->dim() <= cfg.k - 1;
        rec.deficit_sum = static_cast<std::int64_t>(rank_profile(params, *outcome.subspace).deficit_sum);
    }
    if (cfg.oracle) {
        const OracleList truth = brute_force_list(params, g, outcome.radius, cfg.limit);
        rec.oracle_list_size = static_cast<std::int64_t>(truth.members.size());
        pass = pass && truth.members == outcome.list;
    }

    if (cfg.fault_injection == "oversized_list") {
        rec.list_size = static_cast<std::int64_t>(frs_list_bound(cfg.k)) + 1 + rec.list_size;
        pass = false;
    }
    rec.pass = pass;
    return rec;
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    const FrsParams params = config.make_params();
    const Rng root(config.seed);

    ExperimentResult result;
    result.records.reserve(config.trials + 1);
    for (std::uint64_t t = 0; t < config.trials; ++t) result.records.push_back(run_trial(config, params, root, t));

    std::ostringstream csv;
    csv << kExperimentCsvHeader << '\n';
    for (const TrialRecord& r : result.records) csv << r.csv_row() << '\n';

    if (config.trials > 0) {
        TrialRecord summary;
        summary.label = "summary";
        summary.oracle_list_size = -1;
        summary.deficit_sum = -1;
        summary.subspace_dim = -1;
        for (const TrialRecord& r : result.records) {
            summary.errors = std::max(summary.errors, r.errors);
            summary.subspace_dim = std::max(summary.subspace_dim, r.subspace_dim);
            summary.list_size = std::max(summary.list_size, r.list_size);
            summary.oracle_list_size = std::max(summary.oracle_list_size, r.oracle_list_size);
            summary.deficit_sum = std::max(summary.deficit_sum, r.deficit_sum);
            summary.radius_num = r.radius_num;
            summary.radius_den = r.radius_den;
            summary.pass = summary.pass && r.pass;
        }
        result.all_pass = summary.pass;
        csv << summary.csv_row() << '\n';
        result.records.push_back(summary);
    }

    result.csv = csv.str();
    return result;
}

} // namespace frs
