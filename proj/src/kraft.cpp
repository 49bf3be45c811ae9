#include "bt1/kraft.hpp"

#include "bt1/error.hpp"

namespace bt1 {

KraftModule::KraftModule(std::uint64_t p, std::vector<std::string> labels, std::vector<std::size_t> successor,
                         std::vector<Letter> letter)
    : p_(p), labels_(std::move(labels)), successor_(std::move(successor)), letter_(std::move(letter)) {
    const std::size_t n = labels_.size();
    if (successor_.size() != n || letter_.size() != n)
        throw Error(ErrorCode::ShapeMismatch, "labels, successor and letters must have equal length");
    std::vector<bool> hit(n, false);
    for (std::size_t s : successor_) {
        if (s >= n || hit[s])
            throw Error(ErrorCode::NotABijection, "successor map is not a bijection");
        hit[s] = true;
    }
}

nlohmann::json KraftModule::to_json() const {
    nlohmann::json pi = nlohmann::json::object();
    nlohmann::json letter = nlohmann::json::object();
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        pi[labels_[i]] = labels_[successor_[i]];
        letter[labels_[i]] = std::string(1, static_cast<char>(letter_[i]));
    }
    return {{"p", p_}, {"labels", labels_}, {"pi", pi}, {"letter", letter}};
}

KraftModule module_from_word(std::uint64_t p, const Word& w) {
    if (w.empty())
        throw Error(ErrorCode::EmptyWord, "M(w) needs a nonempty word");
    const std::size_t n = w.length();
    std::vector<std::string> labels;
    std::vector<std::size_t> succ;
    std::vector<Letter> letter;
    for (std::size_t j = 0; j < n; ++j) {
        labels.push_back(std::to_string(j));
        succ.push_back((j + 1) % n);
        letter.push_back(w.u(j));
    }
    return KraftModule(p, std::move(labels), std::move(succ), std::move(letter));
}

KraftModule module_from_permdata(std::uint64_t p, const PermutationData& P) {
    return KraftModule(p, P.labels(), P.permutation(), P.sectors());
}

std::pair<SemilinearMap, SemilinearMap> matrices_of(const KraftModule& M, const GaloisField& F) {
    if (F.characteristic() != M.p())
        throw Error(ErrorCode::FieldMismatch, "field characteristic " + std::to_string(F.characteristic()) +
                                                  " differs from module p " + std::to_string(M.p()));
    const std::size_t n = M.dimension();
    SemilinearMap Fm{Matrix(n, n), +1};
    SemilinearMap Vm{Matrix(n, n), -1};
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t b = M.successor(a);
        if (M.letter(a) == Letter::f)
            Fm.matrix(b, a) = F.one(); // F(e_a) = e_b
        else
            Vm.matrix(a, b) = F.one(); // V(e_b) = e_a
    }
    return {std::move(Fm), std::move(Vm)};
}

std::uint64_t a_number(const Word& w) {
    if (w.empty())
        throw Error(ErrorCode::EmptyWord, "a-number of the empty word");
    const std::size_t n = w.length();
    std::uint64_t count = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (w.u(j) == Letter::v && w.u((j + n - 1) % n) == Letter::f)
            ++count;
    }
    return count;
}

std::uint64_t a_number(const BT1Multiset& ms) {
    std::uint64_t total = 0;
    for (const auto& [w, m] : ms)
        total += a_number(w.representative()) * m;
    return total;
}

std::uint64_t p_rank(const BT1Multiset& ms) { return ms.multiplicity(CyclicWord::parse("f")); }

bool module_isomorphic(const BT1Multiset& x, const BT1Multiset& y) { return x == y; }

} // namespace bt1
