#include "bt1/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bt1/duality.hpp"
#include "bt1/error.hpp"
#include "bt1/fermat.hpp"
#include "bt1/galois.hpp"
#include "bt1/kraft.hpp"
#include "bt1/permdata.hpp"
#include "bt1/realize.hpp"
#include "bt1/semilinear.hpp"
#include "bt1/sweep.hpp"

namespace bt1::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_usage_code(ErrorCode c) {
    switch (c) {
    case ErrorCode::EmptyWord:
    case ErrorCode::BadCharacter:
    case ErrorCode::NotABijection:
    case ErrorCode::UnknownLabel:
    case ErrorCode::NotPrime:
    case ErrorCode::DegreeTooLarge:
    case ErrorCode::NotCoprime:
    case ErrorCode::DegreeTooSmall:
    case ErrorCode::NotDivisible:
    case ErrorCode::OutOfRange:
    case ErrorCode::NotPrimitive:
    case ErrorCode::InvalidSpec:
    case ErrorCode::ParseError:
        return true;
    default:
        return false;
    }
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// JSON given inline, or read from a file when prefixed with '@'.
json parse_json_arg(const std::string& text, const std::string& flag) {
    const std::string body = !text.empty() && text[0] == '@' ? read_file(text.substr(1)) : text;
    try {
        return json::parse(body);
    } catch (const json::exception& e) {
        throw UsageError(flag + ": invalid JSON: " + e.what());
    }
}

std::uint64_t default_budget() {
    const char* env = std::getenv(kBudgetEnv);
    if (env == nullptr || *env == '\0')
        return kDefaultEnumerationBudget;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size() || v == 0)
            throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string(kBudgetEnv) + " must be a positive integer");
    }
}

struct CurveFlags {
    std::optional<std::uint64_t> p;
    std::optional<std::uint64_t> quotient_d, fermat_d, ordinary_r, fiber_d, fiber_r;
    std::optional<std::string> curve_json;

    void attach(CLI::App* app) {
        app->add_option("--p", p, "Characteristic");
        app->add_option("--quotient-d", quotient_d, "Quotient curve y^2 = x^d + 1 ... of degree d");
        app->add_option("--fermat-d", fermat_d, "Fermat curve of degree d");
        app->add_option("--ordinary-r", ordinary_r, "Ordinary Artin-Schreier curve with r points at infinity");
        app->add_option("--fiber-d", fiber_d, "Fiber product: Fermat degree");
        app->add_option("--fiber-r", fiber_r, "Fiber product: ordinary parameter");
        app->add_option("--curve", curve_json, "Curve as JSON (inline or @file)");
    }

    bool any() const {
        return quotient_d || fermat_d || ordinary_r || fiber_d || fiber_r || curve_json;
    }

    CurveSpec build() const {
        const int count = (quotient_d ? 1 : 0) + (fermat_d ? 1 : 0) + (ordinary_r ? 1 : 0) +
                          ((fiber_d || fiber_r) ? 1 : 0) + (curve_json ? 1 : 0);
        if (count != 1)
            throw UsageError("exactly one curve must be given");
        CurveSpec c;
        if (curve_json) {
            json j = parse_json_arg(*curve_json, "--curve");
            if (p && j.is_object())
                j["p"] = *p;
            c = CurveSpec::from_json(j);
        } else {
            if (!p)
                throw UsageError("--p is required");
            c.p = *p;
            if (quotient_d)
                c.variant = FermatQuotient{*quotient_d};
            else if (fermat_d)
                c.variant = Fermat{*fermat_d};
            else if (ordinary_r)
                c.variant = OrdinaryAS{*ordinary_r};
            else if (fiber_d && fiber_r)
                c.variant = FiberProduct{*fiber_d, *fiber_r};
            else
                throw UsageError("--fiber-d and --fiber-r must be given together");
        }
        validate(c);
        return c;
    }
};

std::string genus_text(const GenusReport& g) {
    return g.lower_bound ? ">=" + std::to_string(g.value) : std::to_string(g.value);
}

void emit_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [k, v] : rows)
        width = std::max(width, k.size());
    for (const auto& [k, v] : rows)
        out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

json decompose_report(const CurveSpec& c, const Decomposition& dec) {
    const GenusReport g = genus_of(c);
    json j;
    j["curve"] = c.to_json();
    j["genus"] = g.value;
    if (g.lower_bound)
        j["genus_is_lower_bound"] = true;
    j["multiset"] = dec.expanded.to_json();
    j["per_orbit"] = to_json(dec.per_orbit);
    j["num_orbits"] = dec.num_orbits;
    j["p_rank"] = p_rank(dec.expanded);
    j["a_number"] = a_number(dec.expanded);
    j["self_dual"] = is_self_dual(dec.expanded);
    j["partial"] = dec.partial;
    return j;
}

int cmd_decompose(const CurveFlags& cf, const std::string& format, std::uint64_t budget, std::ostream& out) {
    const CurveSpec c = cf.build();
    const Decomposition dec = decompose(c, {budget});
    const json j = decompose_report(c, dec);
    if (format == "json") {
        out << j.dump() << '\n';
    } else if (format == "csv") {
        out << kSweepHeader << '\n';
        std::string d = c.to_json().contains("d") ? c.to_json()["d"].dump() : "";
        out << c.p << ',' << d << ',' << c.variant_name() << ',' << genus_text(genus_of(c)) << ','
            << j["p_rank"].dump() << ',' << j["a_number"].dump() << ',' << dec.num_orbits << ','
            << j["self_dual"].dump() << ',' << csv_quote(j["multiset"].dump()) << '\n';
    } else {
        emit_table(out, {{"curve", c.to_json().dump()},
                         {"genus", genus_text(genus_of(c))},
                         {"multiset", j["multiset"].dump()},
                         {"num_orbits", std::to_string(dec.num_orbits)},
                         {"p_rank", j["p_rank"].dump()},
                         {"a_number", j["a_number"].dump()},
                         {"self_dual", j["self_dual"].dump()},
                         {"partial", j["partial"].dump()}});
    }
    return kExitOk;
}

int cmd_invariants(const CurveFlags& cf, const std::optional<std::string>& target, const std::string& format,
                   std::uint64_t budget, std::ostream& out) {
    json j;
    BT1Multiset ms;
    if (target) {
        if (cf.any())
            throw UsageError("give either a curve or --target, not both");
        ms = BT1Multiset::from_json(parse_json_arg(*target, "--target"));
    } else {
        const CurveSpec c = cf.build();
        ms = decompose(c, {budget}).expanded;
        const GenusReport g = genus_of(c);
        j["curve"] = c.to_json();
        j["genus"] = g.value;
        if (g.lower_bound)
            j["genus_is_lower_bound"] = true;
    }
    j["multiset"] = ms.to_json();
    j["dimension"] = ms.dimension();
    j["p_rank"] = p_rank(ms);
    j["a_number"] = a_number(ms);
    j["self_dual"] = is_self_dual(ms);
    j["polarized"] = is_self_dual(ms) ? polarized_to_json(polarized_factorization(ms)) : json(nullptr);
    if (format == "json") {
        out << j.dump() << '\n';
    } else if (format == "table") {
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& [k, v] : j.items())
            rows.emplace_back(k, v.dump());
        emit_table(out, rows);
    } else {
        throw UsageError("invariants supports --format json|table");
    }
    return kExitOk;
}

VerifyMode parse_mode(const std::string& m) {
    if (m == "witness")
        return VerifyMode::Witness;
    if (m == "full")
        return VerifyMode::Full;
    throw UsageError("mode must be witness or full");
}

int cmd_realize(std::uint64_t p, const std::string& target, bool polarized, const std::string& verify,
                const std::optional<std::string>& out_path, std::uint64_t budget, std::uint64_t search_budget,
                std::ostream& out) {
    const BT1Multiset ms = BT1Multiset::from_json(parse_json_arg(target, "--target"));
    RealizeOptions opts;
    opts.search.budget = search_budget;
    const RealizationPlan plan = polarized ? realize_polarized(p, ms, opts) : realize(p, ms, opts);
    json j = plan.to_json();
    if (out_path) {
        std::ofstream f(*out_path, std::ios::binary);
        if (!f)
            throw UsageError("cannot write '" + *out_path + "'");
        f << j.dump(2) << '\n';
    }
    int code = kExitOk;
    if (verify != "none") {
        const VerificationReport rep = verify_plan(plan, parse_mode(verify), {budget});
        j["verification"] = rep.to_json();
        code = rep.passed ? kExitOk : kExitFailure;
    }
    out << j.dump() << '\n';
    return code;
}

int cmd_verify(const std::string& plan_path, const std::string& mode, std::uint64_t budget, std::ostream& out) {
    const json j = parse_json_arg("@" + plan_path, "--plan");
    const RealizationPlan plan = RealizationPlan::from_json(j);
    const VerificationReport rep = verify_plan(plan, parse_mode(mode), {budget});
    out << rep.to_json().dump() << '\n';
    return rep.passed ? kExitOk : kExitFailure;
}

int cmd_axioms(std::uint64_t p, unsigned m, const std::optional<std::string>& word,
               const std::optional<std::string>& permdata, std::uint64_t base_changes, std::uint64_t seed,
               std::ostream& out) {
    if (word.has_value() == permdata.has_value())
        throw UsageError("give exactly one of --word or --permdata");
    const GaloisField F = GaloisField::make(p, m);
    const KraftModule M =
        word ? module_from_word(p, Word::parse(*word))
             : module_from_permdata(p, PermutationData::from_json(parse_json_arg("@" + *permdata, "--permdata")));
    const auto [Fm, Vm] = matrices_of(M, F);
    const AxiomReport rep = verify_bt1_axioms(Fm, Vm, F);

    std::mt19937_64 rng(seed);
    bool invariant = true;
    for (std::uint64_t i = 0; i < base_changes; ++i) {
        const Matrix P = random_invertible(F, M.dimension(), rng);
        const auto [F2, V2] = base_change(Fm, Vm, P, F);
        if (verify_bt1_axioms(F2, V2, F).all_pass() != rep.all_pass())
            invariant = false;
    }

    json j;
    j["p"] = p;
    j["m"] = m;
    j["module"] = M.to_json();
    j["axioms"] = rep.to_json();
    j["ker_f_cap_ker_v"] = kernel_intersection_dim(Fm, Vm, F);
    if (word)
        j["a_number"] = a_number(Word::parse(*word));
    j["base_changes"] = base_changes;
    j["base_change_invariant"] = invariant;
    out << j.dump() << '\n';
    return rep.all_pass() && invariant ? kExitOk : kExitFailure;
}

std::vector<std::uint64_t> parse_prime_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            if (!is_prime(v))
                throw Error(ErrorCode::NotPrime, item + " is not prime");
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw UsageError("--p: bad list entry '" + item + "'");
        }
    }
    if (out.empty())
        throw UsageError("--p: empty list");
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"BT1 group schemes: Kraft words, Fermat curve decompositions, realization"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string format = "json";
    std::optional<std::uint64_t> budget;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--budget", budget, "Enumeration budget (overrides BT1_ENUM_BUDGET)")
            ->check(CLI::PositiveNumber);
    };

    CurveFlags curve;
    auto* dec = app.add_subcommand("decompose", "Decompose J[p] of a curve into Kraft words");
    curve.attach(dec);
    dec->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));
    add_common(dec);

    std::optional<std::string> target;
    auto* inv = app.add_subcommand("invariants", "Genus, p-rank, a-number, self-duality, polarized factors");
    curve.attach(inv);
    inv->add_option("--target", target, "BT1 multiset as JSON (inline or @file)");
    inv->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
    add_common(inv);

    std::uint64_t rp = 0;
    std::string rtarget, verify_mode = "none";
    bool polarized = false;
    std::optional<std::string> out_path;
    std::uint64_t search_budget = SearchOptions{}.budget;
    auto* rea = app.add_subcommand("realize", "Build a curve whose J[p] contains a target BT1 module");
    rea->add_option("--p", rp)->required();
    rea->add_option("--target", rtarget, "BT1 multiset as JSON (inline or @file)")->required();
    rea->add_flag("--polarized", polarized, "Treat the target as a polarized module");
    rea->add_option("--verify", verify_mode)->check(CLI::IsMember({"none", "witness", "full"}));
    rea->add_option("--out", out_path, "Also write the plan to this file");
    rea->add_option("--search-budget", search_budget)->check(CLI::PositiveNumber);
    add_common(rea);

    std::string plan_path, mode = "witness";
    auto* ver = app.add_subcommand("verify", "Re-check a stored realization plan");
    ver->add_option("--plan", plan_path, "Plan file ('-' for stdin)")->required();
    ver->add_option("--mode", mode)->check(CLI::IsMember({"witness", "full"}));
    add_common(ver);

    std::string plist;
    std::uint64_t d_min = 3, d_max = 0;
    std::string family = "quotient";
    std::size_t workers = 1;
    auto* swp = app.add_subcommand("sweep", "CSV over a (p, d) grid");
    swp->add_option("--p", plist, "Comma-separated primes")->required();
    swp->add_option("--d-min", d_min);
    swp->add_option("--d-max", d_max)->required();
    swp->add_option("--family", family)->check(CLI::IsMember({"quotient", "fermat"}));
    swp->add_option("--workers", workers)->check(CLI::PositiveNumber);
    add_common(swp);

    std::uint64_t ap = 0, base_changes = 0, seed = 0;
    unsigned am = 2;
    std::optional<std::string> word, permdata;
    auto* axi = app.add_subcommand("axioms", "Check Ker F = Im V, Ker V = Im F, FV = VF = 0");
    axi->add_option("--p", ap)->required();
    axi->add_option("--m", am, "Degree of the coefficient field over GF(p)");
    axi->add_option("--word", word);
    axi->add_option("--permdata", permdata, "Permutation data JSON file");
    axi->add_option("--base-changes", base_changes, "Random base changes to apply");
    axi->add_option("--seed", seed);

    std::vector<std::string> argv_store{"bt1"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const std::uint64_t b = budget ? *budget : default_budget();
        if (dec->parsed())
            return cmd_decompose(curve, format, b, out);
        if (inv->parsed())
            return cmd_invariants(curve, target, format, b, out);
        if (rea->parsed())
            return cmd_realize(rp, rtarget, polarized, verify_mode, out_path, b, search_budget, out);
        if (ver->parsed())
            return cmd_verify(plan_path, mode, b, out);
        if (swp->parsed()) {
            SweepRequest req;
            req.primes = parse_prime_list(plist);
            req.d_min = d_min;
            req.d_max = d_max;
            req.family = family == "fermat" ? SweepFamily::Fermat : SweepFamily::Quotient;
            req.workers = workers;
            req.budget = b;
            sweep(req, out);
            return kExitOk;
        }
        if (axi->parsed())
            return cmd_axioms(ap, am, word, permdata, base_changes, seed, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_usage_code(e.code()) ? kExitUsage : kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace bt1::cli
