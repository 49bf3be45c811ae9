#include "bt1/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "bt1/duality.hpp"
#include "bt1/error.hpp"
#include "bt1/kraft.hpp"

namespace bt1 {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string sweep_row(std::uint64_t p, std::uint64_t d, SweepFamily family, std::uint64_t budget) {
    CurveSpec c{p, FermatQuotient{d}};
    if (family == SweepFamily::Fermat)
        c.variant = Fermat{d};
    const std::string name = family == SweepFamily::Quotient ? "quotient" : "fermat";
    std::string row = std::to_string(p) + "," + std::to_string(d) + "," + name + "," +
                      std::to_string(genus_of(c).value) + ",";
    try {
        const Decomposition dec = decompose(c, {budget});
        row += std::to_string(p_rank(dec.expanded)) + "," + std::to_string(a_number(dec.expanded)) + "," +
               std::to_string(dec.num_orbits) + "," + (is_self_dual(dec.expanded) ? "true" : "false") + "," +
               csv_quote(dec.expanded.to_json().dump());
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded)
            throw;
        row += ",,,,BUDGET_EXCEEDED";
    }
    return row;
}

void sweep(const SweepRequest& req, std::ostream& out) {
    std::vector<std::uint64_t> primes = req.primes;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    std::vector<std::pair<std::uint64_t, std::uint64_t>> cells;
    for (std::uint64_t p : primes)
        for (std::uint64_t d = std::max<std::uint64_t>(req.d_min, 3); d <= req.d_max; ++d)
            if (std::gcd(p, d) == 1)
                cells.emplace_back(p, d);

    std::vector<std::string> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t i = next++; i < cells.size(); i = next++)
            rows[i] = sweep_row(cells[i].first, cells[i].second, req.family, req.budget);
    };
    const std::size_t n = std::clamp<std::size_t>(req.workers, 1, std::max<std::size_t>(cells.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n; ++t)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();

    out << kSweepHeader << '\n';
    for (const auto& r : rows)
        out << r << '\n';
}

} // namespace bt1
