#include <doctest.h>

#include "bt1/error.hpp"
#include "bt1/fermat.hpp"
#include "bt1/kraft.hpp"
#include "oracles.hpp"

using namespace bt1;

namespace {

PermutationData worked_example() {
    std::vector<std::string> labels;
    for (int i = 1; i <= 9; ++i)
        labels.push_back(std::to_string(i));
    std::vector<Letter> sector(9, Letter::v);
    for (int i : {2, 3, 5, 6, 9})
        sector[i - 1] = Letter::f;
    return PermutationData(labels, sector, {2, 3, 4, 5, 0, 1, 7, 8, 6});
}

/// Block-diagonal sum of the Kraft modules of a multiset.
KraftModule direct_sum(std::uint64_t p, const BT1Multiset& ms) {
    std::vector<std::string> labels;
    std::vector<std::size_t> succ;
    std::vector<Letter> letter;
    for (const auto& [w, m] : ms)
        for (std::uint64_t c = 0; c < m; ++c) {
            const std::size_t base = labels.size(), n = w.length();
            for (std::size_t j = 0; j < n; ++j) {
                labels.push_back(std::to_string(base + j));
                succ.push_back(base + (j + 1) % n);
                letter.push_back(w.representative().u(j));
            }
        }
    return KraftModule(p, labels, succ, letter);
}

std::vector<std::size_t> rank_profile(const KraftModule& M, const GaloisField& F) {
    const auto [Fm, Vm] = matrices_of(M, F);
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k <= M.dimension(); ++k) {
        out.push_back(iterated_rank(Fm, k, F));
        out.push_back(iterated_rank(Vm, k, F));
    }
    out.push_back(kernel_intersection_dim(Fm, Vm, F));
    return out;
}

} // namespace

TEST_CASE("one-letter modules") {
    const auto F = GaloisField::make(5, 1);
    auto [Fm, Vm] = matrices_of(module_from_word(5, parse_word("f")), F);
    CHECK(Fm.matrix(0, 0) == F.one());
    CHECK(Vm.matrix(0, 0) == F.zero());
    std::tie(Fm, Vm) = matrices_of(module_from_word(5, parse_word("v")), F);
    CHECK(Fm.matrix(0, 0) == F.zero());
    CHECK(Vm.matrix(0, 0) == F.one());
}

TEST_CASE("M(fv)") {
    const auto F = GaloisField::make(3, 1);
    const auto [Fm, Vm] = matrices_of(module_from_word(3, parse_word("fv")), F);
    // F(e_1) = e_0, V(e_1) = e_0, both kill e_0.
    CHECK(Fm.matrix(0, 1) == F.one());
    CHECK(Vm.matrix(0, 1) == F.one());
    std::size_t ones = 0;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            ones += (Fm.matrix(r, c) == F.one()) + (Vm.matrix(r, c) == F.one());
    CHECK(ones == 2);
    CHECK(Fm.twist == 1);
    CHECK(Vm.twist == -1);
}

TEST_CASE("field characteristic must match") {
    const auto F = GaloisField::make(5, 1);
    try {
        matrices_of(module_from_word(3, parse_word("fv")), F);
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FieldMismatch);
    }
}

TEST_CASE("permutation-data modules match the direct sum of their words") {
    const auto F = GaloisField::make(3, 2);
    const auto P = worked_example();
    const auto M = module_from_permdata(3, P);
    CHECK(M.dimension() == 9);
    CHECK(rank_profile(M, F) == rank_profile(direct_sum(3, BT1Multiset::parse(R"({"ffv":2,"fvv":1})")), F));

    const auto Q = quotient_perm_data(3, 8);
    CHECK(rank_profile(module_from_permdata(3, Q), F) ==
          rank_profile(direct_sum(3, BT1Multiset::parse(R"({"v":2,"f":2,"fv":1})")), F));

    const auto one = module_from_permdata(3, PermutationData({"a"}, {Letter::v}, {0}));
    CHECK(rank_profile(one, F) == rank_profile(module_from_word(3, parse_word("v")), F));
}

TEST_CASE("a-number and p-rank") {
    CHECK(a_number(parse_word("fv")) == 1);
    CHECK(a_number(parse_word("v")) == 0);
    CHECK(a_number(parse_word("f")) == 0);
    CHECK(a_number(BT1Multiset::parse(R"({"v":2,"f":2,"fv":1})")) == 1);
    CHECK(p_rank(BT1Multiset::parse(R"({"f":3,"fv":1})")) == 3);
    CHECK(p_rank(BT1Multiset::parse(R"({"v":5})")) == 0);
    CHECK(p_rank(decompose({2, Fermat{3}}).expanded) == 0);
    // F_7 at 2 is not of p-rank zero: the Cartier-Manin matrix has two 3-cycles.
    CHECK(p_rank(decompose({2, Fermat{7}}).expanded) == 6);
    CHECK(oracle::fermat_p_rank(2, 7) == 6);
}

TEST_CASE("property: Fermat p-rank and a-number agree with the Cartier-Manin matrix") {
    for (std::uint64_t p : {2, 3, 5, 7})
        for (std::uint64_t d = 3; d <= 16; ++d) {
            if (d % p == 0)
                continue;
            CAPTURE(p);
            CAPTURE(d);
            const auto ms = decompose({p, Fermat{d}}).expanded;
            const auto sp = static_cast<std::int64_t>(p), sd = static_cast<std::int64_t>(d);
            CHECK(p_rank(ms) == oracle::fermat_p_rank(sp, sd));
            CHECK(a_number(ms) == oracle::fermat_a_number(sp, sd));
        }
}

TEST_CASE("module_isomorphic") {
    CHECK(module_isomorphic(BT1Multiset::parse(R"({"fv":2})"), expand_to_primitive_multiset({parse_word("fvfv")})));
    CHECK_FALSE(module_isomorphic(BT1Multiset::parse(R"({"f":1,"v":1})"), BT1Multiset::parse(R"({"fv":1})")));
    CHECK(module_isomorphic(BT1Multiset::parse(R"({"ffv":2,"fvv":1})"), BT1Multiset::parse(R"({"vff":2,"vvf":1})")));
}

TEST_CASE("property: adjacency a-number equals dim(Ker F cap Ker V); p-rank equals stable rank of F") {
    for (std::uint64_t p : {2, 3, 5}) {
        const auto F = GaloisField::make(p, 1);
        for (const auto& s : oracle::all_words_up_to(7)) {
            const Word w = parse_word(s);
            const auto [Fm, Vm] = matrices_of(module_from_word(p, w), F);
            CHECK(a_number(w) == kernel_intersection_dim(Fm, Vm, F));
            const auto [root, e] = primitive_root(w);
            BT1Multiset ms;
            ms.add(CyclicWord(root), e);
            CHECK(p_rank(ms) == iterated_rank(Fm, w.length(), F));
            CHECK(verify_bt1_axioms(Fm, Vm, F).all_pass());
        }
    }
}

TEST_CASE("property: the module of w and of any rotation are indistinguishable by ranks") {
    const auto F = GaloisField::make(2, 2);
    for (const auto& s : oracle::all_words_up_to(6)) {
        const Word w = parse_word(s);
        CHECK(rank_profile(module_from_word(2, w), F) == rank_profile(module_from_word(2, w.rotate(1)), F));
    }
}
