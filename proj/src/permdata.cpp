#include "bt1/permdata.hpp"

#include <algorithm>
#include <charconv>

#include "bt1/error.hpp"

namespace bt1 {

PermutationData::PermutationData(std::vector<std::string> labels, std::vector<Letter> sector,
                                 std::vector<std::size_t> pi)
    : labels_(std::move(labels)), sector_(std::move(sector)), pi_(std::move(pi)) {
    const std::size_t n = labels_.size();
    if (sector_.size() != n || pi_.size() != n)
        throw Error(ErrorCode::ShapeMismatch, "labels, sector and pi must have equal length");
    index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw Error(ErrorCode::InvalidSpec, "duplicate label '" + labels_[i] + "'");
    }
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (pi_[i] >= n || hit[pi_[i]])
            throw Error(ErrorCode::NotABijection,
                        "pi is not a bijection (at element '" + labels_[i] + "')");
        hit[pi_[i]] = true;
    }
}

PermutationData PermutationData::from_maps(const std::vector<std::string>& labels,
                                           const std::unordered_map<std::string, Letter>& sector,
                                           const std::unordered_map<std::string, std::string>& pi) {
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < labels.size(); ++i)
        idx.emplace(labels[i], i);
    std::vector<Letter> sec;
    std::vector<std::size_t> perm;
    for (const auto& l : labels) {
        const auto s = sector.find(l);
        if (s == sector.end())
            throw Error(ErrorCode::InvalidSpec, "sector missing for element '" + l + "'");
        sec.push_back(s->second);
        const auto t = pi.find(l);
        if (t == pi.end())
            throw Error(ErrorCode::NotABijection, "pi undefined on element '" + l + "'");
        const auto target = idx.find(t->second);
        if (target == idx.end())
            throw Error(ErrorCode::NotABijection, "pi maps '" + l + "' outside the element set");
        perm.push_back(target->second);
    }
    return PermutationData(labels, std::move(sec), std::move(perm));
}

std::size_t PermutationData::index_of(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end())
        throw Error(ErrorCode::UnknownLabel, "no element labelled '" + label + "'");
    return it->second;
}

PermutationData PermutationData::swapped_sectors() const {
    std::vector<Letter> sec(sector_.size());
    std::transform(sector_.begin(), sector_.end(), sec.begin(), swap_letter);
    return PermutationData(labels_, std::move(sec), pi_);
}

namespace {

nlohmann::json label_json(const std::string& label) {
    long long value = 0;
    const char* first = label.data();
    const char* last = first + label.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc() && ptr == last && std::to_string(value) == label)
        return value;
    return label;
}

std::string label_string(const nlohmann::json& j) {
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    throw Error(ErrorCode::ParseError, "labels must be strings or integers");
}

} // namespace

nlohmann::json PermutationData::to_json() const {
    nlohmann::json elements = nlohmann::json::array();
    nlohmann::json sector = nlohmann::json::object();
    nlohmann::json pi = nlohmann::json::object();
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        elements.push_back(label_json(labels_[i]));
        sector[labels_[i]] = std::string(1, static_cast<char>(sector_[i]));
        pi[labels_[i]] = label_json(labels_[pi_[i]]);
    }
    return {{"elements", elements}, {"sector", sector}, {"pi", pi}};
}

PermutationData PermutationData::from_json(const nlohmann::json& j) {
    try {
        std::vector<std::string> labels;
        for (const auto& e : j.at("elements"))
            labels.push_back(label_string(e));
        std::unordered_map<std::string, Letter> sector;
        for (const auto& [k, v] : j.at("sector").items()) {
            const auto s = v.get<std::string>();
            if (s != "f" && s != "v")
                throw Error(ErrorCode::ParseError, "sector of '" + k + "' must be \"f\" or \"v\"");
            sector.emplace(k, static_cast<Letter>(s[0]));
        }
        std::unordered_map<std::string, std::string> pi;
        for (const auto& [k, v] : j.at("pi").items())
            pi.emplace(k, label_string(v));
        if (sector.size() != labels.size())
            throw Error(ErrorCode::InvalidSpec, "sector map must be keyed by exactly the elements");
        if (pi.size() != labels.size())
            throw Error(ErrorCode::NotABijection, "pi must be keyed by exactly the elements");
        return from_maps(labels, sector, pi);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::vector<Orbit> orbits(const PermutationData& P) {
    std::vector<Orbit> out;
    std::vector<bool> seen(P.size(), false);
    for (std::size_t start = 0; start < P.size(); ++start) {
        if (seen[start])
            continue;
        Orbit o;
        for (std::size_t x = start; !seen[x]; x = P.pi(x)) {
            seen[x] = true;
            o.members.push_back(x);
        }
        out.push_back(std::move(o));
    }
    return out;
}

Word word_of_orbit(const PermutationData& P, std::size_t index) {
    if (index >= P.size())
        throw Error(ErrorCode::UnknownLabel, "element index out of range");
    std::vector<Letter> u;
    std::size_t x = index;
    do {
        u.push_back(P.sector(x));
        x = P.pi(x);
    } while (x != index);
    return Word::from_indexed(u);
}

Word word_of_orbit(const PermutationData& P, const std::string& label) {
    return word_of_orbit(P, P.index_of(label));
}

OrbitWordMultisets orbit_word_multisets(const PermutationData& P) {
    OrbitWordMultisets out;
    for (const Orbit& o : orbits(P)) {
        const Word w = word_of_orbit(P, o.members.front());
        out.per_orbit[CyclicWord(w)] += 1;
        out.expanded.add_expanded(w);
    }
    return out;
}

bool permdata_isomorphic(const PermutationData& P, const PermutationData& Q) {
    if (P.size() != Q.size())
        return false;
    return orbit_word_multisets(P).per_orbit == orbit_word_multisets(Q).per_orbit;
}

} // namespace bt1
