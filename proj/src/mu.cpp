#include "frb/mu.hpp"

#include <algorithm>
#include <stdexcept>

namespace frb {

namespace {

void check_index(const RhoTable& t, int i)
{
    if (i < 1 || i > t.n())
        throw std::invalid_argument("index " + std::to_string(i) + " outside 1..n");
}

// Sorted, duplicate-free copy; validates range.
IndexList normalized(const RhoTable& t, std::span<const int> set)
{
    IndexList s(set.begin(), set.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("index set has repeated elements");
    for (int i : s)
        check_index(t, i);
    return s;
}

bool column_clear(const RhoTable& t, const IndexList& sorted, int i, int j, const Clause& c)
{
    for (int ip : sorted) {
        if (ip >= i)
            break;
        if (c.forbids(t(ip, j)))
            return false;
    }
    return true;
}

int find_witness(const RhoTable& t, const IndexList& sorted, int i, const ClauseSet& clauses)
{
    for (const auto& c : clauses)
        for (int j : t.columns_hitting(i, c.hit))
            if (column_clear(t, sorted, i, j, c))
                return j;
    return 0;
}

} // namespace

const char* to_string(PairStatus s)
{
    switch (s) {
    case PairStatus::Wb:
        return "WB";
    case PairStatus::Wwb:
        return "WWB";
    case PairStatus::Owb:
        return "OWB";
    case PairStatus::None:
        break;
    }
    return "NONE";
}

PairStatus pair_status(const RhoTable& t, int i, int j)
{
    check_index(t, i);
    check_index(t, j);
    const int r = t(i, j);
    for (int ip = 1; ip < i; ++ip)
        if (t(ip, j) >= r)
            return PairStatus::None;
    bool wwb = true;
    for (int jp = 1; jp < j; ++jp)
        if (t(i, jp) >= r) {
            wwb = false;
            break;
        }
    if (!wwb)
        return PairStatus::Owb;
    for (int ip = 1; ip <= i; ++ip)
        for (int jp = 1; jp <= j; ++jp)
            if ((ip != i || jp != j) && t(ip, jp) >= r)
                return PairStatus::Wwb;
    return PairStatus::Wb;
}

StatusTable::StatusTable(const RhoTable& t) : n_(t.n()), cells_(std::size_t(n_) * n_, PairStatus::None)
{
    // col_max[j]: max over rows < i in column j; box[i][j]: max over the box (1..i, 1..j).
    std::vector<int> col_max(n_ + 1, 0);
    std::vector<int> box_prev(n_ + 1, 0), box_cur(n_ + 1, 0);
    for (int i = 1; i <= n_; ++i) {
        int row_max = 0;
        box_cur[0] = 0;
        for (int j = 1; j <= n_; ++j) {
            const int r = t(i, j);
            PairStatus s = PairStatus::None;
            if (col_max[j] < r) {
                s = PairStatus::Owb;
                if (row_max < r) {
                    s = PairStatus::Wwb;
                    if (std::max(box_prev[j], box_cur[j - 1]) < r)
                        s = PairStatus::Wb;
                }
            }
            cells_[std::size_t(i - 1) * n_ + (j - 1)] = s;
            row_max = std::max(row_max, r);
            box_cur[j] = std::max({box_prev[j], box_cur[j - 1], r});
        }
        for (int j = 1; j <= n_; ++j)
            col_max[j] = std::max(col_max[j], t(i, j));
        std::swap(box_prev, box_cur);
    }
}

bool owb_wrt(const RhoTable& t, int i, int j, std::span<const int> iprime)
{
    check_index(t, j);
    const auto s = normalized(t, iprime);
    if (!std::binary_search(s.begin(), s.end(), i))
        throw std::invalid_argument("owb_wrt: i must belong to I'");
    return column_clear(t, s, i, j, Clause::plain(t(i, j)));
}

ClauseSet mu_clauses(std::span<const int> targets)
{
    ClauseSet cs;
    for (int l : targets)
        cs.push_back(Clause::plain(l));
    return cs;
}

ClauseSet exception_clauses(int l, int g)
{
    return {Clause::exception(l, g)};
}

ClauseSet relaxed_clauses(int l, int pivot)
{
    return {Clause::exception(l, pivot - l - 1), Clause::pivot(l, pivot)};
}

bool satisfies(const RhoTable& t, std::span<const int> iprime, const ClauseSet& clauses)
{
    const auto s = normalized(t, iprime);
    for (int i : s)
        if (!find_witness(t, s, i, clauses))
            return false;
    return true;
}

int witness(const RhoTable& t, int i, std::span<const int> iprime, const ClauseSet& clauses)
{
    const auto s = normalized(t, iprime);
    return find_witness(t, s, i, clauses);
}

bool check_mu(const RhoTable& t, std::span<const int> iprime, std::span<const int> targets)
{
    return satisfies(t, iprime, mu_clauses(targets));
}

bool check_mu_exception(const RhoTable& t, std::span<const int> iprime, int l, int g)
{
    if (g < 0 || l < 1 || l + g > t.n())
        throw std::invalid_argument("check_mu_exception: need 1 <= l and l + g <= n");
    return satisfies(t, iprime, exception_clauses(l, g));
}

bool check_relaxed_mu(const RhoTable& t, std::span<const int> iprime, int l, int pivot)
{
    if (l < 1 || pivot <= l || pivot > t.n())
        throw std::invalid_argument("check_relaxed_mu: need l < pivot <= n");
    return satisfies(t, iprime, relaxed_clauses(l, pivot));
}

IndexList harvest(const StatusTable& s, const RhoTable& t, std::span<const int> targets, PairStatus min_status)
{
    IndexList out;
    for (int i = 1; i <= t.n(); ++i) {
        bool hit = false;
        for (int l : targets) {
            for (int j : t.columns_hitting(i, l))
                if (s(i, j) >= min_status) {
                    hit = true;
                    break;
                }
            if (hit)
                break;
        }
        if (hit)
            out.push_back(i);
    }
    return out;
}

} // namespace frb
