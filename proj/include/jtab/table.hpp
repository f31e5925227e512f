#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jtab/partition.hpp"
#include "jtab/tropical.hpp"

namespace jtab {

// Cell coordinates of the (r-1) x (u-r) table: 1 <= k <= r-1, 1 <= l <= u-r.
struct TableIndex {
    int k;
    int l;
    bool operator==(const TableIndex&) const = default;
};

inline void check_index(const StableQ& q, TableIndex idx) {
    detail::check_table_coords(q.u, q.r, idx.k, idx.l);
}

enum class CasePath { A, B, C };

inline char to_char(CasePath c) {
    return c == CasePath::A ? 'A' : c == CasePath::B ? 'B' : 'C';
}

// The table partition P_{k,l}(Q), computed as the conjugate of the first
// differences of the corank sequence (with corank(0) = 0).
inline Partition jordan_type_from_corank(const StableQ& q, TableIndex idx) {
    check_index(q, idx);
    const CorankSequence seq = corank_sequence(q.u, q.r, idx.k, idx.l);
    std::vector<int> diffs;
    int prev = 0;
    for (int c : seq.values) {
        diffs.push_back(c - prev);
        prev = c;
    }
    return conjugate(Partition(std::move(diffs)));
}

// Which lines the corank envelope passes through. L2 and L3 count only where
// they are strict minimizers among all four lines; at ties the cell falls
// through to the A or B path, whose closed forms cover the boundary.
inline CasePath case_path(const StableQ& q, TableIndex idx) {
    check_index(q, idx);
    const detail::CorankLines L(q.u, q.r, idx.k, idx.l);
    bool strict2 = false, strict3 = false;
    for (long long s = 2; s <= 2LL * q.u; ++s) {
        strict2 = strict2 || L.l2(s) < std::min({L.l1(s), L.l3(s), L.l4(s)});
        strict3 = strict3 || L.l3(s) < std::min({L.l1(s), L.l2(s), L.l4(s)});
    }
    if (strict2 && strict3) return CasePath::C;
    if (!strict3) return CasePath::A;
    return CasePath::B;
}

// Closed-form P_{k,l}(Q) per case path, assembled from almost rectangular
// blocks. Must agree with jordan_type_from_corank everywhere.
inline Partition closed_form_partition(const StableQ& q, TableIndex idx) {
    check_index(q, idx);
    const int u = q.u, r = q.r, k = idx.k, l = idx.l;
    const int lp = std::min(l, r - k);
    std::vector<int> v;
    auto push = [&v](const Partition& p) {
        v.insert(v.end(), p.parts().begin(), p.parts().end());
    };
    switch (case_path(q, idx)) {
        case CasePath::A:
            push(almost_rectangular(u, k));
            push(almost_rectangular(u - r, l));
            break;
        case CasePath::B:
            push(almost_rectangular(u - r + 2 * lp, lp));
            push(almost_rectangular(u - 2 * lp, k + l - lp));
            break;
        case CasePath::C: {
            // on the C path l = l' < k, and the envelope spends one integer
            // step on L2 and one on L3
            const int s1 = (u - r) / l;
            const int e = (u - r) - s1 * l;
            if (e == 0) {  // degenerate C, same part list as the A form
                push(almost_rectangular(u, k));
                push(almost_rectangular(u - r, l));
            } else {
                push(almost_rectangular(u - r + 2 * l, l));
                push(almost_rectangular(u - 2 * l - s1 * (l - e), k - l + e));
                v.insert(v.end(), std::size_t(l - e), s1);
            }
            break;
        }
    }
    return Partition(std::move(v));
}

// Burge code alpha^{u-r-l} beta^l alpha^{r-k} beta^k alpha, serialized with
// 'a' for alpha and 'b' for beta. Length u+1, ends in 'a', and has exactly
// two adjacent "ba" pairs.
inline std::string burge_code(const StableQ& q, TableIndex idx) {
    check_index(q, idx);
    std::string w;
    w.append(std::size_t(q.u - q.r - idx.l), 'a');
    w.append(std::size_t(idx.l), 'b');
    w.append(std::size_t(q.r - idx.k), 'a');
    w.append(std::size_t(idx.k), 'b');
    w += 'a';
    return w;
}

struct UChainLengths {
    int top = 0;
    std::optional<int> middle;
    int bottom = 0;
    bool operator==(const UChainLengths&) const = default;
};

// Case-specific U-chain lengths. All values are <= u and the maximum is u.
inline UChainLengths u_chain_lengths(const StableQ& q, TableIndex idx) {
    check_index(q, idx);
    const int u = q.u, r = q.r, k = idx.k, l = idx.l;
    const int lp = std::min(l, r - k);
    switch (case_path(q, idx)) {
        case CasePath::A: {
            const int s1 = (u - r) / l, e1 = (u - r) - s1 * l;
            const int s2 = u / k, e2 = u - s2 * k;
            UChainLengths c{u, std::nullopt, u - r + 2 * k};
            if (e1 > 0 && e2 > 0 && s2 == s1 + 2) c.middle = u - (s2 - 1) * (e2 - e1);
            return c;
        }
        case CasePath::B: {
            const int s3 = (u - 2 * lp) / (k + l - lp);
            const int e3 = (u - 2 * lp) - s3 * (k + l - lp);
            const int s4 = (u - r) / lp, e4 = (u - r) - s4 * lp;
            UChainLengths c{u - r + 2 * lp, std::nullopt, u};
            if (e3 > 0 && e4 > 0 && s4 == s3) c.middle = s3 * (lp + e3 - e4) + 2 * lp + e3;
            return c;
        }
        case CasePath::C: {
            const int s1 = (u - r) / l, e = (u - r) - s1 * l;
            const int f = (r - 2 * l) - (s1 + 1) * (k - l);
            if (e == 0) return UChainLengths{u, std::nullopt, u - s1 * f};
            return UChainLengths{(s1 + 2) * (l + f) + e, u, u - s1 * f};
        }
    }
    throw std::logic_error("unreachable");
}

struct TableEntry {
    TableIndex index{};
    Partition partition;
    CasePath case_path = CasePath::A;
    TypeSet types;
    std::string burge;
    CorankSequence coranks{};
    UChainLengths u_chains;
};

// The full (r-1) x (u-r) table of Jordan types with D(P) = Q, row-major in
// (k, l). All entries are pairwise distinct and entry (1,1) is Q itself.
class JTable {
public:
    JTable(StableQ q, std::vector<TableEntry> entries)
        : q_(q), entries_(std::move(entries)) {}

    const StableQ& q() const { return q_; }
    const std::vector<TableEntry>& entries() const { return entries_; }

    const TableEntry& at(int k, int l) const {
        check_index(q_, {k, l});
        return entries_[std::size_t(k - 1) * std::size_t(q_.u - q_.r) + std::size_t(l - 1)];
    }

private:
    StableQ q_;
    std::vector<TableEntry> entries_;
};

inline JTable full_table(const StableQ& q) {
    std::vector<TableEntry> entries;
    std::set<std::vector<int>> seen;
    for (int k = 1; k <= q.r - 1; ++k) {
        for (int l = 1; l <= q.u - q.r; ++l) {
            const TableIndex idx{k, l};
            TableEntry e;
            e.index = idx;
            e.partition = jordan_type_from_corank(q, idx);
            if (e.partition != closed_form_partition(q, idx))
                throw std::logic_error("closed form disagrees with corank route at " +
                                       e.partition.str());
            e.case_path = case_path(q, idx);
            e.types = classify_type(e.partition, q.u);
            e.burge = burge_code(q, idx);
            e.coranks = corank_sequence(q.u, q.r, idx.k, idx.l);
            e.u_chains = u_chain_lengths(q, idx);
            if (!seen.insert(e.partition.parts()).second)
                throw std::logic_error("duplicate table entry " + e.partition.str());
            entries.push_back(std::move(e));
        }
    }
    return JTable(q, std::move(entries));
}

}  // namespace jtab
