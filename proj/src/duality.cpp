#include "bt1/duality.hpp"

#include "bt1/error.hpp"

namespace bt1 {

BT1Multiset dual_multiset(const BT1Multiset& ms) {
    BT1Multiset out;
    for (const auto& [w, m] : ms)
        out.add(complement(w), m);
    return out;
}

bool is_self_dual(const BT1Multiset& ms) { return dual_multiset(ms) == ms; }

std::uint64_t PolarizedFactor::rank_exponent() const {
    return kind == Kind::SelfComplementary ? w.length() : 2 * w.length();
}

nlohmann::json PolarizedFactor::to_json() const {
    if (kind == Kind::SelfComplementary)
        return {{"kind", "self"}, {"w", w.str()}, {"mult", multiplicity}};
    return {{"kind", "pair"}, {"w", w.str()}, {"wc", wc.str()}, {"mult", multiplicity}};
}

std::vector<PolarizedFactor> polarized_factorization(const BT1Multiset& ms) {
    std::vector<PolarizedFactor> out;
    for (const auto& [w, m] : ms) {
        const CyclicWord wc = complement(w);
        const std::uint64_t mc = ms.multiplicity(wc);
        if (mc != m)
            throw Error(ErrorCode::NotSelfDual, "\"" + w.str() + "\"");
        if (wc == w)
            out.push_back({PolarizedFactor::Kind::SelfComplementary, w, w, m});
        else if (w < wc)
            out.push_back({PolarizedFactor::Kind::ComplementPair, w, wc, m});
    }
    return out;
}

BT1Multiset reassemble(const std::vector<PolarizedFactor>& factors) {
    BT1Multiset out;
    for (const auto& f : factors) {
        out.add(f.w, f.multiplicity);
        if (f.kind == PolarizedFactor::Kind::ComplementPair)
            out.add(f.wc, f.multiplicity);
    }
    return out;
}

nlohmann::json polarized_to_json(const std::vector<PolarizedFactor>& factors) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : factors)
        arr.push_back(f.to_json());
    return {{"factors", arr}, {"polarization", "asserted"}};
}

std::vector<PolarizedFactor> polarized_from_json(const nlohmann::json& j) {
    std::vector<PolarizedFactor> out;
    try {
        for (const auto& f : j.at("factors")) {
            PolarizedFactor pf;
            const auto kind = f.at("kind").get<std::string>();
            pf.w = CyclicWord::parse(f.at("w").get<std::string>());
            pf.multiplicity = f.at("mult").get<std::uint64_t>();
            if (kind == "self") {
                pf.kind = PolarizedFactor::Kind::SelfComplementary;
                pf.wc = pf.w;
            } else if (kind == "pair") {
                pf.kind = PolarizedFactor::Kind::ComplementPair;
                pf.wc = CyclicWord::parse(f.at("wc").get<std::string>());
            } else {
                throw Error(ErrorCode::ParseError, "unknown polarized factor kind '" + kind + "'");
            }
            out.push_back(std::move(pf));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return out;
}

} // namespace bt1
