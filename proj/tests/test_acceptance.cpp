// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "bt1/digits.hpp"
#include "bt1/duality.hpp"
#include "bt1/error.hpp"
#include "bt1/fermat.hpp"
#include "bt1/kraft.hpp"
#include "bt1/permdata.hpp"
#include "bt1/realize.hpp"
#include "bt1/semilinear.hpp"
#include "bt1/sweep.hpp"
#include "oracles.hpp"

using namespace bt1;

namespace {

/// Collects the first few failure messages of a criterion.
struct Check {
    std::uint64_t total = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> detail;

    void operator()(bool ok, const std::string& what) {
        ++total;
        if (ok)
            return;
        ++failed;
        if (detail.size() < 5)
            detail.push_back(what);
    }
};

std::map<std::string, std::uint64_t> as_map(const BT1Multiset& ms) {
    std::map<std::string, std::uint64_t> out;
    for (const auto& [w, m] : ms)
        out[w.str()] = m;
    return out;
}

BT1Multiset single(const std::string& w) {
    BT1Multiset ms;
    ms.add_expanded(parse_word(w));
    return ms;
}

std::uint64_t ipow(std::uint64_t p, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--)
        r *= p;
    return r;
}

void criterion1(Check& c) {
    std::vector<std::string> labels;
    for (int i = 1; i <= 9; ++i)
        labels.push_back(std::to_string(i));
    std::unordered_map<std::string, Letter> sector;
    for (auto s : {"2", "3", "5", "6", "9"})
        sector[s] = Letter::f;
    for (auto s : {"1", "4", "7", "8"})
        sector[s] = Letter::v;
    const auto P = PermutationData::from_maps(labels, sector,
                                              {{"1", "3"}, {"3", "5"}, {"5", "1"}, {"2", "4"}, {"4", "6"},
                                               {"6", "2"}, {"7", "8"}, {"8", "9"}, {"9", "7"}});
    const auto r = orbit_word_multisets(P);
    c(to_json(r.per_orbit) == nlohmann::json({{"ffv", 2}, {"fvv", 1}}), "per-orbit multiset " + to_json(r.per_orbit).dump());
}

void criterion2(Check& c) {
    std::mt19937_64 rng(2024);
    for (std::uint64_t p : {2, 3, 5})
        for (unsigned m : {1u, 2u}) {
            const auto F = GaloisField::make(p, m);
            for (const auto& s : oracle::all_words_up_to(8)) {
                const auto [Fm, Vm] = matrices_of(module_from_word(p, parse_word(s)), F);
                const auto base = verify_bt1_axioms(Fm, Vm, F);
                const std::string tag = "p=" + std::to_string(p) + " m=" + std::to_string(m) + " w=" + s;
                c(base.all_pass(), tag + " fails the axioms");
                for (int i = 0; i < 50; ++i) {
                    const auto [F2, V2] = base_change(Fm, Vm, random_invertible(F, s.size(), rng), F);
                    c(verify_bt1_axioms(F2, V2, F) == base, tag + " verdict changed under base change");
                }
            }
            const auto alpha = verify_bt1_axioms({Matrix(1, 1), 1}, {Matrix(1, 1), -1}, F);
            c(!alpha.all_pass() && !alpha.ker_f_eq_im_v, "alpha_p accepted over p=" + std::to_string(p));
        }
}

void criterion3(Check& c) {
    const std::vector<std::tuple<std::uint64_t, std::uint64_t, nlohmann::json>> cases{
        {3, 8, {{"v", 2}, {"f", 2}, {"fv", 1}}}, {2, 3, {{"fv", 1}}}, {2, 7, {{"fvv", 1}, {"ffv", 1}}}};
    for (const auto& [p, d, want] : cases) {
        const auto got = decompose({p, FermatQuotient{d}}).expanded;
        const std::string tag = "p=" + std::to_string(p) + " d=" + std::to_string(d);
        c(got.to_json() == want, tag + " got " + got.to_json().dump());
        c(as_map(got) == oracle::quotient_decomposition(p, d), tag + " disagrees with naive enumeration");
    }
}

void criteria4and5(Check& c4, Check& c5) {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (std::uint64_t d = 1; d <= 200; ++d) {
            if (std::gcd(p, d) != 1)
                continue;
            const CurveSpec q{p, FermatQuotient{d}};
            const auto ms = decompose(q).expanded;
            const std::string tag = "p=" + std::to_string(p) + " d=" + std::to_string(d);
            c4(ms.dimension() == 2 * genus_of(q).value, tag + " quotient dimension");
            c5(is_self_dual(ms), tag + " quotient not self-dual");
            if (d > 40)
                continue;
            const CurveSpec f{p, Fermat{d}};
            const auto fm = decompose(f).expanded;
            const std::uint64_t t = d >= 1 ? (d - 1) * (d >= 2 ? d - 2 : 0) : 0;
            c4(fm.dimension() == 2 * genus_of(f).value, tag + " Fermat dimension");
            c4(fm.dimension() == t && oracle::fermat_set_size(d) == t && enumeration_size(f) == t,
               tag + " |T| != (d-1)(d-2)");
            c5(is_self_dual(fm), tag + " Fermat not self-dual");
        }
    }
}

void criterion6(Check& c) {
    for (std::uint64_t p : {2, 3, 5, 7})
        for (std::uint64_t ell = 1; ell <= 6; ++ell) {
            const std::uint64_t d = ipow(p, ell) - 1;
            for (std::uint64_t a = 1; a < d; ++a)
                c(sector_of(a, p, ell) == sector_archimedean(a, p, ell),
                  "p=" + std::to_string(p) + " l=" + std::to_string(ell) + " a=" + std::to_string(a));
        }
}

void criterion7(Check& c) {
    std::vector<std::string> words = oracle::all_words_up_to(3);
    for (auto w : {"ff", "vv", "fvfv", "fff", "ffvffv"})
        words.push_back(w);
    for (std::uint64_t p : {5, 7})
        for (const auto& s : words) {
            const std::string tag = "p=" + std::to_string(p) + " w=" + s;
            try {
                const auto plan = realize(p, single(s));
                const auto rep = verify_plan(plan, VerifyMode::Full);
                c(rep.passed, tag + " verification failed");
                // The length-6 case is allowed to fall back to witness mode if over budget.
                c(rep.full_checked || s.size() == 6, tag + " was not fully checked");
                const Word w = parse_word(s);
                if (is_primitive(w) && w.length() > 1)
                    c(genus_within_bound(plan.genus.value, p, w.length()), tag + " genus bound");
            } catch (const std::exception& e) {
                c(false, tag + " threw " + e.what());
            }
        }
}

void criterion8(Check& c) {
    try {
        element_for_word(parse_word("fvfv"), 3);
        c(false, "element_for_word(fvfv, 3) returned");
    } catch (const Error& e) {
        c(e.code() == ErrorCode::NotRealizable, std::string("wrong error ") + e.what());
    }
    for (std::uint64_t a = 1; a < 80; ++a)
        if (a != 40)
            c(canonicalize(quotient_orbit_word(3, 80, a)).str() != "fvfv",
              "a=" + std::to_string(a) + " in S(80) has word fvfv");
    for (std::uint64_t a = 1; a < 15; ++a) {
        const auto [root, e] = oracle::primitive_root(quotient_orbit_word(2, 15, a).str());
        c(e == 1, "a=" + std::to_string(a) + " in S(15) has a non-primitive word");
    }
}

void criterion9(Check& c) {
    const auto f8 = decompose({3, Fermat{8}}).expanded;
    c(f8.multiplicity("f") >= 1 && f8.multiplicity("v") >= 1, "F_8 at 3 is " + f8.to_json().dump());
    c(decompose({3, Fermat{2}}).expanded.empty(), "F_2 decomposition not empty");
}

void criterion10(Check& c) {
    const auto pw = pair_for_word(parse_word("fvfv"), 3);
    c(pw.recipe_pair == std::optional<Pair>(Pair{21, 19}), "recipe pair is not (21,19)");
    c(fermat_orbit_word(3, 80, 21, 19).str() == "vvfv", "word of (21,19) is " + fermat_orbit_word(3, 80, 21, 19).str());
    c(pw.recipe_word == std::optional<std::string>("vvfv") && !pw.recipe_matched, "recipe_matched not recorded false");

    // The hand-computed alternatives.
    c(canonicalize(fermat_orbit_word(3, 80, 10, 20)).str() == "fv", "(10,20) orbit word");
    c(canonicalize(fermat_orbit_word(3, 80, 20, 10)).str() == "fv", "(20,10) orbit word");
    c(fermat_orbit_word(3, 80, 10, 20).length() == 2 && mul_mod(3, 10, 80) != 20, "(10,20), (20,10) share an orbit");

    const auto plan = realize(3, BT1Multiset::parse(R"({"fv":2})"));
    c(verify_plan(plan, VerifyMode::Witness).passed, "witness verification failed");
    c(verify_plan(plan, VerifyMode::Full).passed, "full verification failed");
}

void criterion11(Check& c) {
    const auto plan = realize(2, BT1Multiset::parse(R"({"f":2,"v":1,"fvv":1})"));
    c(plan.curve == CurveSpec{2, FiberProduct{7, 3}}, "curve is " + plan.curve.to_json().dump());
    c(verify_plan(plan, VerifyMode::Witness).passed, "witness verification failed");
    const auto pr = p_rank(decompose({2, Fermat{7}}).expanded);
    c(pr == 0, "p_rank(J_{F_7}[2]) = " + std::to_string(pr) + ", expected 0");
}

void criterion12(Check& c) {
    for (std::uint64_t p : {2, 3, 5}) {
        const auto F = GaloisField::make(p, 1);
        for (const auto& s : oracle::all_words_up_to(8)) {
            const auto [Fm, Vm] = matrices_of(module_from_word(p, parse_word(s)), F);
            c(a_number(parse_word(s)) == kernel_intersection_dim(Fm, Vm, F), "p=" + std::to_string(p) + " w=" + s);
        }
    }
}

void criterion13(Check& c) {
    SweepRequest req;
    req.primes = {2, 3};
    req.d_max = 50;
    req.family = SweepFamily::Quotient;
    req.workers = 8;
    std::ostringstream a, b;
    sweep(req, a);
    sweep(req, b);
    c(a.str() == b.str(), "two runs differ");
    req.workers = 1;
    std::ostringstream s;
    sweep(req, s);
    c(a.str() == s.str(), "8 workers differ from 1 worker");
}

} // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        Check check;
    };
    std::vector<Criterion> cs;
    for (auto [id, name] : std::vector<std::pair<int, std::string>>{
             {1, "worked permutation data multiset"},
             {2, "BT1 axioms and base-change invariance, alpha_p rejected"},
             {3, "quotient curve decompositions"},
             {4, "dimension accounting"},
             {5, "self-duality of decompositions"},
             {6, "digit rule equals archimedean rule"},
             {7, "realization round trip for p > 3"},
             {8, "negative results for (fv)^2 at 3 and squares at 2"},
             {9, "p = 3 Fermat special case"},
             {10, "recipe audit for (fv)^2 at 3"},
             {11, "p = 2 composite realization"},
             {12, "a-number oracle equality"},
             {13, "sweep determinism"}})
        cs.push_back({id, name, {}});

    // Each run reports into the check with the given position in cs.
    const std::vector<std::pair<std::size_t, std::function<void()>>> runs{
        {0, [&] { criterion1(cs[0].check); }},
        {1, [&] { criterion2(cs[1].check); }},
        {2, [&] { criterion3(cs[2].check); }},
        {3, [&] { criteria4and5(cs[3].check, cs[4].check); }},
        {5, [&] { criterion6(cs[5].check); }},
        {6, [&] { criterion7(cs[6].check); }},
        {7, [&] { criterion8(cs[7].check); }},
        {8, [&] { criterion9(cs[8].check); }},
        {9, [&] { criterion10(cs[9].check); }},
        {10, [&] { criterion11(cs[10].check); }},
        {11, [&] { criterion12(cs[11].check); }},
        {12, [&] { criterion13(cs[12].check); }}};
    for (const auto& [slot, fn] : runs) {
        try {
            fn();
        } catch (const std::exception& e) {
            cs[slot].check(false, std::string("exception: ") + e.what());
        }
    }

    int failed = 0;
    for (const auto& cr : cs) {
        const bool ok = cr.check.failed == 0 && cr.check.total > 0;
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.name << " ("
                  << cr.check.total - cr.check.failed << "/" << cr.check.total << " checks)\n";
        for (const auto& d : cr.check.detail)
            std::cout << "      " << d << '\n';
    }
    return failed == 0 ? 0 : 1;
}
