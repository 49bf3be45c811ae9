#include "bt1/words.hpp"

#include <algorithm>

#include "bt1/error.hpp"

namespace bt1 {

Word Word::parse(std::string_view text) {
    if (text.empty())
        throw Error(ErrorCode::EmptyWord, "word must have at least one letter");
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'f' && text[i] != 'v')
            throw BadCharacterError(i, text[i]);
    }
    return Word(std::string(text));
}

Word Word::from_indexed(const std::vector<Letter>& u) {
    std::string text(u.size(), 'f');
    for (std::size_t j = 0; j < u.size(); ++j)
        text[u.size() - 1 - j] = static_cast<char>(u[j]);
    return Word(std::move(text));
}

Word Word::rotate(std::size_t k) const {
    const std::size_t n = text_.size();
    if (n == 0)
        return *this;
    k %= n;
    if (k == 0)
        return *this;
    return Word(text_.substr(n - k) + text_.substr(0, n - k));
}

Word Word::power(std::size_t e) const {
    std::string out;
    out.reserve(text_.size() * e);
    for (std::size_t i = 0; i < e; ++i)
        out += text_;
    return Word(std::move(out));
}

bool Word::is_constant(Letter x) const noexcept {
    return !text_.empty() &&
           std::all_of(text_.begin(), text_.end(), [x](char c) { return c == static_cast<char>(x); });
}

std::size_t least_rotation_offset(std::string_view s) {
    const std::size_t n = s.size();
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const char a = s[(i + k) % n];
        const char b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j)
            ++j;
        k = 0;
    }
    return std::min(i, j);
}

namespace {

void require_nonempty(const Word& w) {
    if (w.empty())
        throw Error(ErrorCode::EmptyWord, "operation requires a nonempty word");
}

} // namespace

CyclicWord::CyclicWord(const Word& w) {
    require_nonempty(w);
    const std::string& s = w.str();
    const std::size_t off = least_rotation_offset(s);
    rep_ = Word::parse(s.substr(off) + s.substr(0, off));
}

Word parse_word(std::string_view text) { return Word::parse(text); }

Word complement(const Word& w) {
    require_nonempty(w);
    std::string out = w.str();
    for (char& c : out)
        c = (c == 'f') ? 'v' : 'f';
    return Word::parse(out);
}

CyclicWord complement(const CyclicWord& w) { return CyclicWord(complement(w.representative())); }

CyclicWord canonicalize(const Word& w) { return CyclicWord(w); }

PrimitiveRoot primitive_root(const Word& w) {
    require_nonempty(w);
    const std::string& s = w.str();
    const std::size_t n = s.size();
    // KMP failure function; the smallest period divides n iff w is a proper power.
    std::vector<std::size_t> fail(n + 1, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && s[i] != s[k])
            k = fail[k];
        if (s[i] == s[k])
            ++k;
        fail[i + 1] = k;
    }
    const std::size_t period = n - fail[n];
    if (period < n && n % period == 0)
        return {Word::parse(s.substr(0, period)), n / period};
    return {w, 1};
}

bool is_primitive(const Word& w) { return primitive_root(w).exponent == 1; }

void BT1Multiset::add(const CyclicWord& w, std::uint64_t count) {
    if (count == 0)
        return;
    if (!is_primitive(w.representative()))
        throw Error(ErrorCode::NotPrimitive, "multiset key '" + w.str() + "' is not primitive");
    entries_[w] += count;
}

void BT1Multiset::add_expanded(const Word& w, std::uint64_t count) {
    if (count == 0)
        return;
    const auto [root, exponent] = primitive_root(w);
    entries_[CyclicWord(root)] += count * exponent;
}

std::uint64_t BT1Multiset::multiplicity(const CyclicWord& w) const {
    const auto it = entries_.find(w);
    return it == entries_.end() ? 0 : it->second;
}

std::uint64_t BT1Multiset::multiplicity(std::string_view word) const {
    return multiplicity(CyclicWord::parse(word));
}

std::uint64_t BT1Multiset::dimension() const {
    std::uint64_t total = 0;
    for (const auto& [w, m] : entries_)
        total += w.length() * m;
    return total;
}

bool BT1Multiset::contains(const BT1Multiset& sub) const {
    return std::all_of(sub.entries_.begin(), sub.entries_.end(),
                       [this](const auto& kv) { return multiplicity(kv.first) >= kv.second; });
}

BT1Multiset& BT1Multiset::operator+=(const BT1Multiset& other) {
    for (const auto& [w, m] : other.entries_)
        entries_[w] += m;
    return *this;
}

BT1Multiset& BT1Multiset::operator-=(const BT1Multiset& other) {
    if (!contains(other))
        throw Error(ErrorCode::OutOfRange, "multiset difference of a non-contained multiset");
    for (const auto& [w, m] : other.entries_) {
        auto it = entries_.find(w);
        it->second -= m;
        if (it->second == 0)
            entries_.erase(it);
    }
    return *this;
}

nlohmann::json BT1Multiset::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [w, m] : entries_)
        j[w.str()] = m;
    return j;
}

BT1Multiset BT1Multiset::from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "multiset must be a JSON object");
    BT1Multiset out;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0)
            throw Error(ErrorCode::ParseError, "multiplicity of '" + key + "' must be a positive integer");
        out.add(CyclicWord::parse(key), value.get<std::uint64_t>());
    }
    return out;
}

BT1Multiset BT1Multiset::parse(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return from_json(j);
}

BT1Multiset expand_to_primitive_multiset(const std::vector<Word>& orbit_words) {
    BT1Multiset out;
    for (const Word& w : orbit_words) {
        require_nonempty(w);
        out.add_expanded(w);
    }
    return out;
}

BT1Multiset expand(const CyclicWordCounts& per_orbit) {
    BT1Multiset out;
    for (const auto& [w, m] : per_orbit)
        out.add_expanded(w.representative(), m);
    return out;
}

nlohmann::json to_json(const CyclicWordCounts& counts) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [w, m] : counts)
        j[w.str()] = m;
    return j;
}

} // namespace bt1
