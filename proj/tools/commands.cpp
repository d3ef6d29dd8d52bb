#include "commands.hpp"

#include "weight_syntax.hpp"

#include "affcone/cone.hpp"
#include "affcone/oracles/checks.hpp"
#include "affcone/repmult.hpp"

#include <atomic>
#include <functional>
#include <thread>

namespace affcone::cli {

using json = nlohmann::ordered_json;

namespace {

/// Raised when the depth or table bound does not settle the answer.
struct Undecided : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json config_json(const RunConfig& c)
{
    json j;
    j["command"] = c.command;
    j["type"] = c.type;
    if (c.max_len < 0) j["max_len"] = "default";
    else j["max_len"] = c.max_len;
    j["depth"] = c.depth;
    j["jobs"] = c.jobs;
    if (!c.lambda1.empty()) j["lambda1"] = c.lambda1;
    if (!c.lambda2.empty()) j["lambda2"] = c.lambda2;
    if (!c.mu.empty()) j["mu"] = c.mu;
    if (!c.triples.empty()) j["triples"] = c.triples;
    if (c.command == "b0") j["window"] = c.window;
    if (c.command == "saturate") {
        j["d"] = c.d;
        j["mode"] = c.mode;
    }
    if (c.command == "structure-constants") j["node"] = c.node;
    return j;
}

json rational_vector(const RatVec& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json int_vector(const IntVec& v)
{
    json a = json::array();
    for (long x : v) a.push_back(x);
    return a;
}

json weight_json(const AffineRootData& d, const AffineWeight& w)
{
    json j;
    j["text"] = format_weight(d, w);
    j["labels"] = rational_vector(d.affine_labels(w));
    j["level"] = to_string(w.level);
    j["delta"] = to_string(w.delta);
    return j;
}

json element_json(const std::vector<int>& word, const IntVec& h)
{
    json j;
    j["word"] = word;
    j["translation"] = int_vector(h);
    return j;
}

json index_json(const InequalityIndex& a)
{
    json j;
    j["node"] = a.node;
    j["u1"] = element_json(a.w1, a.h1);
    j["u2"] = element_json(a.w2, a.h2);
    j["v"] = element_json(a.wv, a.h);
    return j;
}

/// phi_a as a linear form: coefficients on the finite labels and the level
/// of each argument.
json phi_coefficients(const AffineRootData& d, const InequalityIndex& a)
{
    const Rational depth = d.fundamental_coweight(a.node).d;
    auto part = [&](const AffineCoweight& t, int sign) {
        json j;
        j["dot"] = rational_vector(scale(t.dot, Rational(sign) / depth));
        j["level"] = to_string(Rational(sign * t.c / depth));
        return j;
    };
    json j;
    j["lambda1"] = part(a.t1, 1);
    j["lambda2"] = part(a.t2, 1);
    j["mu"] = part(a.tv, -1);
    return j;
}

json multiplicity_json(const TensorMultiplicity& m)
{
    json j;
    if (m.value) j["value"] = to_string(*m.value);
    else j["value"] = "undecided";
    j["depth"] = m.depth;
    j["required_depth"] = m.required_depth;
    j["orbit_bound"] = m.orbit_bound;
    j["orbit_points"] = m.orbit_points;
    return j;
}

struct Context {
    std::shared_ptr<const AffineRootData> data;
    std::shared_ptr<const WeylGroup> group;
};

Context context(const RunConfig& c)
{
    if (c.max_len < -1) throw std::invalid_argument("--max-len must be nonnegative");
    if (c.depth < 0) throw std::invalid_argument("--depth must be nonnegative");
    if (c.jobs < 1) throw std::invalid_argument("--jobs must be positive");
    Context ctx;
    ctx.data = AffineRootData::build(CartanType::parse(c.type));
    ctx.group = std::make_shared<WeylGroup>(ctx.data);
    return ctx;
}

int default_max_len(const RunConfig& c, const AffineRootData& d)
{
    if (c.max_len >= 0) return c.max_len;
    return d.rank() == 1 ? 8 : 6;
}

constexpr long kLargestAutomaticTable = 64;

/// Table length certifying phi at every triple, from an upper bound on phi
/// read off the identity indices. Throws Undecided above the automatic limit.
int certified_max_len(const RunConfig& c, const Context& ctx, const std::vector<std::array<AffineWeight, 3>>& triples)
{
    if (c.max_len >= 0) return c.max_len;
    const AffineRootData& d = *ctx.data;
    const SchubertTable table(ctx.group, 0, SolveMode::Evaluated);
    const auto identities = enumerate_inequalities(table, 0);
    long needed = 0;
    for (const auto& t : triples) {
        ConePoint x{t[0], t[1], t[2]};
        x.lambda1.delta = x.lambda2.delta = x.mubar.delta = 0;
        if (!d.is_dominant(x.lambda1) || !d.is_dominant(x.lambda2) || !d.is_dominant(x.mubar) ||
            x.mubar.level != x.lambda1.level + x.lambda2.level)
            continue;
        Rational m = phi_index(d, identities.front(), x);
        for (const auto& idx : identities) m = std::min(m, phi_index(d, idx, x));
        needed = std::max(needed, certified_length_cap(d, x, m));
    }
    if (needed > kLargestAutomaticTable)
        throw Undecided("table too small: need max_len >= " + std::to_string(needed) + " (automatic limit " +
                        std::to_string(kLargestAutomaticTable) + "; pass --max-len to force)");
    return static_cast<int>(needed);
}

AffineWeight required_weight(const AffineRootData& d, const std::string& text, const char* name)
{
    if (text.empty()) throw std::invalid_argument(std::string("missing --") + name);
    return parse_weight(d, text);
}

int cmd_inequalities(const RunConfig& c, json& doc)
{
    const Context ctx = context(c);
    const int max_len = default_max_len(c, *ctx.data);
    doc["max_len_used"] = max_len;
    SchubertTable table(ctx.group, max_len, SolveMode::Evaluated);
    const auto list = enumerate_inequalities(table, max_len);
    doc["count"] = list.size();
    json arr = json::array();
    for (const auto& a : list) {
        json j = index_json(a);
        j["phi"] = phi_coefficients(*ctx.data, a);
        arr.push_back(std::move(j));
    }
    doc["inequalities"] = std::move(arr);
    return kOk;
}

json membership_json(const AffineRootData& d, const ConeSolver& s, const std::array<AffineWeight, 3>& t,
                     const MembershipReport& r)
{
    json j;
    j["lambda1"] = weight_json(d, t[0]);
    j["lambda2"] = weight_json(d, t[1]);
    j["mu"] = weight_json(d, t[2]);
    j["verdict"] = to_string(r.verdict);
    j["reason"] = r.reason;
    j["b"] = to_string(r.b);
    if (r.phi) {
        j["phi"] = to_string(*r.phi);
        j["certified_cap"] = r.cap;
    }
    json idx = json::array();
    for (std::size_t k : r.indices) idx.push_back(index_json(s.inequalities()[k]));
    j[r.verdict == MembershipReport::Verdict::NotMember ? "violated" : "tight"] = std::move(idx);
    return j;
}

std::vector<std::string> split_triple(const std::string& text)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= text.size(); ++k)
        if (k == text.size() || text[k] == ';') {
            parts.push_back(text.substr(start, k - start));
            start = k + 1;
        }
    if (parts.size() != 3) throw std::invalid_argument("a triple needs the form 'lambda1 ; lambda2 ; mu'");
    return parts;
}

int cmd_member(const RunConfig& c, json& doc)
{
    const Context ctx = context(c);
    std::vector<std::array<AffineWeight, 3>> triples;
    if (!c.lambda1.empty() || !c.lambda2.empty() || !c.mu.empty())
        triples.push_back({required_weight(*ctx.data, c.lambda1, "lambda1"),
                           required_weight(*ctx.data, c.lambda2, "lambda2"), required_weight(*ctx.data, c.mu, "mu")});
    for (const auto& t : c.triples) {
        const auto p = split_triple(t);
        triples.push_back({parse_weight(*ctx.data, p[0]), parse_weight(*ctx.data, p[1]), parse_weight(*ctx.data, p[2])});
    }
    if (triples.empty()) throw std::invalid_argument("member needs --lambda1/--lambda2/--mu or --triple");
    for (const auto& t : triples)
        if (t[0].level <= 0 || t[1].level <= 0)
            throw std::invalid_argument("membership requires positive levels of lambda1 and lambda2; "
                                        "at level zero the cone is not described by these inequalities");

    const int max_len = certified_max_len(c, ctx, triples);
    doc["max_len_used"] = max_len;
    const ConeSolver solver(ctx.group, max_len);
    std::vector<MembershipReport> reports;
    try {
        reports = solver.is_member_batch(triples, c.jobs);
    } catch (const TableTooSmall& e) {
        throw Undecided(e.what());
    }
    json arr = json::array();
    for (std::size_t k = 0; k < triples.size(); ++k)
        arr.push_back(membership_json(*ctx.data, solver, triples[k], reports[k]));
    doc["results"] = std::move(arr);
    return kOk;
}

int cmd_multiplicity(const RunConfig& c, json& doc)
{
    const Context ctx = context(c);
    const AffineWeight l1 = required_weight(*ctx.data, c.lambda1, "lambda1");
    const AffineWeight l2 = required_weight(*ctx.data, c.lambda2, "lambda2");
    const AffineWeight mu = required_weight(*ctx.data, c.mu, "mu");
    const TensorMultiplier engine(ctx.data, c.depth);
    const TensorMultiplicity m = engine.multiplicity(l1, l2, mu);
    doc["lambda1"] = weight_json(*ctx.data, l1);
    doc["lambda2"] = weight_json(*ctx.data, l2);
    doc["mu"] = weight_json(*ctx.data, mu);
    doc["multiplicity"] = multiplicity_json(m);
    return m.value ? kOk : kUndecided;
}

int cmd_b0(const RunConfig& c, json& doc)
{
    const Context ctx = context(c);
    const AffineWeight l1 = required_weight(*ctx.data, c.lambda1, "lambda1");
    const AffineWeight l2 = required_weight(*ctx.data, c.lambda2, "lambda2");
    const AffineWeight mu = required_weight(*ctx.data, c.mu, "mu");
    const TensorMultiplier engine(ctx.data, c.depth);
    const B0Report r = b0(engine, l1, l2, mu, c.window);
    json j;
    if (r.b0) j["b0"] = *r.b0;
    else j["b0"] = "none found at depth";
    j["window_top"] = r.window_top;
    j["window_bottom"] = r.window_bottom;
    j["support"] = r.support;
    j["undecided"] = r.undecided;
    j["shape"] = r.shape;
    doc["result"] = std::move(j);
    return r.b0 ? kOk : kUndecided;
}

int cmd_saturate(const RunConfig& c, json& doc)
{
    const Context ctx = context(c);
    SaturationMode mode;
    if (c.mode == "stretch") mode = SaturationMode::Stretch;
    else if (c.mode == "delta-shift") mode = SaturationMode::DeltaShift;
    else throw std::invalid_argument("--mode must be 'stretch' or 'delta-shift'");
    const AffineWeight l1 = required_weight(*ctx.data, c.lambda1, "lambda1");
    const AffineWeight l2 = required_weight(*ctx.data, c.lambda2, "lambda2");
    const AffineWeight mu = required_weight(*ctx.data, c.mu, "mu");
    const int max_len = certified_max_len(c, ctx, {{l1, l2, mu}});
    doc["max_len_used"] = max_len;
    const ConeSolver solver(ctx.group, max_len);
    const TensorMultiplier engine(ctx.data, c.depth);
    SaturationReport r;
    try {
        r = solver.saturation_check(engine, l1, l2, mu, c.d, mode);
    } catch (const TableTooSmall& e) {
        throw Undecided(e.what());
    }
    json j;
    j["factor"] = r.factor;
    j["k_g_dot"] = k_g_dot(*ctx.data);
    j["k_s"] = k_s(*ctx.data);
    j["lambda1"] = weight_json(*ctx.data, r.lambda1);
    j["lambda2"] = weight_json(*ctx.data, r.lambda2);
    j["mu"] = weight_json(*ctx.data, r.mu);
    j["multiplicity"] = multiplicity_json(r.multiplicity);
    if (r.confirmed) j["confirmed"] = *r.confirmed;
    else j["confirmed"] = "undecided";
    doc["result"] = std::move(j);
    if (!r.confirmed) return kUndecided;
    if (!*r.confirmed) throw ConsistencyError("saturation predicted a nonzero multiplicity but the value is 0");
    return kOk;
}

int cmd_structure_constants(const RunConfig& c, json& doc)
{
    const Context ctx = context(c);
    const int nodes = ctx.group->num_nodes();
    if (c.node < -1 || c.node >= nodes) throw std::invalid_argument("--node out of range");
    const Parabolic p = c.node < 0 ? Parabolic::borel(nodes) : Parabolic::maximal(nodes, c.node);
    const int max_len = default_max_len(c, *ctx.data);
    doc["max_len_used"] = max_len;
    SchubertTable table(ctx.group, max_len, SolveMode::Evaluated);
    std::vector<std::size_t> reps;
    for (const WeylElement& w : ctx.group->enumerate_min_reps(p, max_len)) reps.push_back(table.index(w));
    json arr = json::array();
    for (std::size_t x = 0; x < reps.size(); ++x)
        for (std::size_t y = x; y < reps.size(); ++y) {
            const std::size_t a = reps[x], b = reps[y];
            if (table.length(a) + table.length(b) > max_len) continue;
            for (const auto& [v, n] : table.product(a, b, p)) {
                json j;
                j["u1"] = table.word(a);
                j["u2"] = table.word(b);
                j["v"] = table.word(v);
                j["n"] = to_string(n);
                if (c.node >= 0) {
                    const long shift =
                        delta_shift(*ctx.group, table.element(a), table.element(b), table.element(v), c.node);
                    j["delta_shift"] = shift;
                    j["deformed"] = to_string(shift == 0 ? n : Integer(0));
                }
                arr.push_back(std::move(j));
            }
        }
    doc["products"] = std::move(arr);
    return kOk;
}

int cmd_selfcheck(const RunConfig& c, json& doc)
{
    context(c);
    auto a1 = AffineRootData::build(CartanType::parse("A1"));
    auto a2 = AffineRootData::build(CartanType::parse("A2"));
    auto c2 = AffineRootData::build(CartanType::parse("C2"));
    auto g1 = std::make_shared<WeylGroup>(a1);
    auto g2 = std::make_shared<WeylGroup>(a2);
    auto gc = std::make_shared<WeylGroup>(c2);
    using oracle::CheckResult;
    const std::vector<std::function<CheckResult()>> checks = {
        [&] { return oracle::check_length_formula(a1, 8); },
        [&] { return oracle::check_length_formula(a2, 8); },
        [&] { return oracle::check_length_formula(c2, 8); },
        [&] { return oracle::check_length_sandwich(a1, 8); },
        [&] { return oracle::check_length_sandwich(a2, 8); },
        [&] { return oracle::check_length_sandwich(c2, 8); },
        [&] { return oracle::check_structure_constants(g1, 6); },
        [&] { return oracle::check_structure_constants(g2, 4); },
        [&] { return oracle::check_delta_shift(g1, 8); },
        [&] { return oracle::check_delta_shift(g2, 4); },
        [&] { return oracle::check_multiplicativity(g1, 4); },
        [&] { return oracle::check_weight_multiplicities(a1, 3, 6); },
        [&] { return oracle::check_weight_multiplicities(a2, 2, 3); },
        [&] { return oracle::check_tensor_multiplicities(a1, 2, 5); },
        [&] { return oracle::check_phi_formula(g1, 20, 1); },
        [&] { return oracle::check_phi_formula(gc, 4, 1); },
    };
    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k; (k = next++) < checks.size();) results[k] = checks[k]();
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < c.jobs; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    json arr = json::array();
    bool ok = true;
    for (const auto& r : results) {
        json j;
        j["name"] = r.name;
        j["comparisons"] = r.comparisons;
        j["failures"] = r.failures;
        j["passed"] = r.passed();
        if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
        arr.push_back(std::move(j));
        ok = ok && r.passed();
    }
    doc["checks"] = std::move(arr);
    doc["passed"] = ok;
    return ok ? kOk : kConsistencyFault;
}

}  // namespace

CommandOutput run_command(const RunConfig& config)
{
    static const std::map<std::string, std::function<int(const RunConfig&, json&)>> commands = {
        {"inequalities", cmd_inequalities}, {"member", cmd_member},     {"multiplicity", cmd_multiplicity},
        {"b0", cmd_b0},                     {"saturate", cmd_saturate}, {"structure-constants", cmd_structure_constants},
        {"selfcheck", cmd_selfcheck},
    };
    CommandOutput out;
    out.doc["config"] = config_json(config);
    auto fail = [&](int code, const char* kind, const std::string& what) {
        out.doc["error"] = {{"kind", kind}, {"message", what}};
        out.exit_code = code;
    };
    const auto it = commands.find(config.command);
    if (it == commands.end()) {
        fail(kInvalidInput, "invalid_input", "unknown command '" + config.command + "'");
        return out;
    }
    try {
        out.exit_code = it->second(config, out.doc);
    } catch (const Undecided& e) {
        fail(kUndecided, "undecided", e.what());
    } catch (const ConsistencyError& e) {
        fail(kConsistencyFault, "consistency_fault", e.what());
    } catch (const std::invalid_argument& e) {
        fail(kInvalidInput, "invalid_input", e.what());
    } catch (const std::out_of_range& e) {
        fail(kInvalidInput, "invalid_input", e.what());
    } catch (const std::exception& e) {
        fail(kConsistencyFault, "internal", e.what());
    }
    return out;
}

}  // namespace affcone::cli
