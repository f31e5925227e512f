// Acceptance suite: runs every top-level correctness criterion end to end and
// prints one pass/fail line each. Exits nonzero if any criterion fails.

#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "jtab/io.hpp"

using namespace jtab;

namespace {

int g_failures = 0;

void report(int num, const char* what, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", num, what,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

// 1. Closed form == corank route for every cell with u <= 14; k+l parts,
//    weight 2u-r, first part <= u; all (r-1)(u-r) entries distinct.
void criterion1() {
    long long cells = 0;
    for (int u = 3; u <= 14; ++u)
        for (int r = 2; r < u; ++r) {
            const StableQ q(u, r);
            std::set<std::vector<int>> seen;
            for (int k = 1; k <= r - 1; ++k)
                for (int l = 1; l <= u - r; ++l) {
                    ++cells;
                    const Partition jt = jordan_type_from_corank(q, {k, l});
                    if (closed_form_partition(q, {k, l}) != jt)
                        return report(1, "table engine self-consistency", false,
                                      "closed form mismatch at u=" + std::to_string(u) +
                                          " r=" + std::to_string(r) + " k=" + std::to_string(k) +
                                          " l=" + std::to_string(l));
                    if (int(jt.size()) != k + l || jt.weight() != 2 * u - r || jt[0] > u)
                        return report(1, "table engine self-consistency", false, "bad shape");
                    seen.insert(jt.parts());
                }
            if (int(seen.size()) != (r - 1) * (u - r))
                return report(1, "table engine self-consistency", false, "entries not distinct");
        }
    report(1, "table engine self-consistency", true, std::to_string(cells) + " cells, u <= 14");
}

// 2. Tropical closed forms equal direct min-plus powering for
//    2 <= r <= 20, 1 <= k <= r-1, 1 <= l' <= r-k, r <= u <= 30, 2 <= s <= 40;
//    the simplification agrees wherever k + l' <= r (everywhere here).
void criterion2() {
    long long checks = 0;
    for (int r = 2; r <= 20; ++r)
        for (int k = 1; k <= r - 1; ++k)
            for (int lp = 1; lp <= r - k; ++lp) {
                const OrderMatrix t(k, lp, r);
                std::vector<long long> direct11(41, 0);
                MinPlusMatrix2 acc = t.matrix();
                for (int s = 2; s <= 40; ++s) {
                    acc = min_plus_mul(acc, t.matrix());
                    direct11[std::size_t(s)] = acc.e[0][0].value();
                }
                for (int u = r; u <= 30; ++u)
                    for (int s = 2; s <= 40; ++s) {
                        ++checks;
                        const long long want = std::min(direct11[std::size_t(s)], (long long)u);
                        if (tropical_power_11(t, s, u) != want ||
                            simplified_power_11(t, s, u) != want)
                            return report(2, "tropical closed forms", false,
                                          "mismatch at r=" + std::to_string(r) +
                                              " k=" + std::to_string(k) + " l'=" + std::to_string(lp) +
                                              " u=" + std::to_string(u) + " s=" + std::to_string(s));
                    }
            }
    report(2, "tropical closed forms", true, std::to_string(checks) + " checks");
}

// 3. For every Q with u <= 9 and every cell: over p = 2^61 - 1 and 5 seeds,
//    the dominance-max sampled Jordan type equals the table entry and the
//    measured corank profile equals the closed-form corank sequence.
void criterion3() {
    long long cells = 0;
    for (int u = 3; u <= 9; ++u)
        for (int r = 2; r < u; ++r) {
            const StableQ q(u, r);
            for (int k = 1; k <= r - 1; ++k)
                for (int l = 1; l <= u - r; ++l) {
                    ++cells;
                    const Partition want = jordan_type_from_corank(q, {k, l});
                    const auto want_coranks = corank_sequence(u, r, k, l).values;
                    std::vector<Partition> observed;
                    for (std::uint64_t seed = 0; seed < 5; ++seed) {
                        const ModMatrix m = build_matrix(sample_point(q, {k, l}, seed), q);
                        observed.push_back(jordan_type_of(m));
                        if (observed.back() == want && corank_profile(m) != want_coranks)
                            return report(3, "matrix oracle matches the table", false,
                                          "corank profile mismatch");
                    }
                    Partition best;
                    bool found = false;
                    for (const Partition& cand : observed) {
                        bool maximal = true;
                        for (const Partition& o : observed)
                            maximal = maximal && dominance_leq(o, cand) == Dominance::less_or_equal;
                        if (maximal) { best = cand; found = true; break; }
                    }
                    if (!found || best != want)
                        return report(3, "matrix oracle matches the table", false,
                                      "type mismatch at u=" + std::to_string(u) +
                                          " r=" + std::to_string(r) + " k=" + std::to_string(k) +
                                          " l=" + std::to_string(l));
                }
        }
    report(3, "matrix oracle matches the table", true,
           std::to_string(cells) + " cells x 5 seeds, u <= 9");
}

// 4. d_oracle(entry) = Q for every entry with u <= 9; Q itself is fixed;
//    almost rectangular partitions flatten to one part.
void criterion4() {
    long long entries = 0;
    for (int u = 3; u <= 9; ++u)
        for (int r = 2; r < u; ++r) {
            const StableQ q(u, r);
            if (d_oracle(q.partition(), 5, 1) != q.partition())
                return report(4, "generic commuting types", false, "Q not fixed");
            for (int k = 1; k <= r - 1; ++k)
                for (int l = 1; l <= u - r; ++l) {
                    ++entries;
                    const Partition entry = jordan_type_from_corank(q, {k, l});
                    if (d_oracle(entry, 5, 2) != q.partition())
                        return report(4, "generic commuting types", false,
                                      "D(" + entry.str() + ") != Q at u=" + std::to_string(u) +
                                          " r=" + std::to_string(r));
                }
        }
    for (const Partition& ar : {Partition({2, 2}), Partition({3, 3}), Partition({4, 3}),
                                Partition({2, 2, 2}), Partition({5})})
        if (d_oracle(ar, 5, 3).size() != 1)
            return report(4, "generic commuting types", false,
                          "D of almost rectangular " + ar.str() + " has several parts");
    report(4, "generic commuting types", true, std::to_string(entries) + " entries, u <= 9");
}

// 5. For Q = (7,3) and Q = (8,5): 1000 unconstrained samples each; whenever
//    the sampled Jordan type coincides with a table entry, that entry's
//    generators all vanish on the sample. Zero violations allowed.
void criterion5() {
    long long matched = 0;
    for (auto [u, r] : {std::pair{7, 4}, std::pair{8, 3}}) {  // Q=(7,3), Q=(8,5)
        const StableQ q(u, r);
        const JTable t = full_table(q);
        std::map<std::vector<int>, TableIndex> by_partition;
        for (const TableEntry& e : t.entries()) by_partition[e.partition.parts()] = e.index;
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const ParamAssignment asn = random_assignment(q, seed);
            const Partition type = jordan_type_of(build_matrix(asn, q));
            const auto it = by_partition.find(type.parts());
            if (it == by_partition.end()) continue;
            ++matched;
            for (const PolyGenerator& gen : equation_set(q, it->second))
                if (evaluate(gen, asn) != 0)
                    return report(5, "equations vanish on matched samples", false,
                                  "violation at u=" + std::to_string(u) + " r=" + std::to_string(r) +
                                      " seed=" + std::to_string(seed));
        }
    }
    report(5, "equations vanish on matched samples", true,
           "2000 samples, " + std::to_string(matched) + " matched, 0 violations");
}

// 6. Burge words: length u+1, terminal alpha, exactly two adjacent beta-alpha
//    pairs, for all cells with u <= 14.
void criterion6() {
    long long words = 0;
    for (int u = 3; u <= 14; ++u)
        for (int r = 2; r < u; ++r)
            for (int k = 1; k <= r - 1; ++k)
                for (int l = 1; l <= u - r; ++l) {
                    ++words;
                    const std::string w = burge_code(StableQ(u, r), {k, l});
                    int pairs = 0;
                    for (std::size_t i = 0; i + 1 < w.size(); ++i)
                        if (w[i] == 'b' && w[i + 1] == 'a') ++pairs;
                    if (int(w.size()) != u + 1 || w.back() != 'a' || pairs != 2)
                        return report(6, "burge words well formed", false,
                                      "bad word " + w + " at u=" + std::to_string(u));
                }
    report(6, "burge words well formed", true, std::to_string(words) + " words, u <= 14");
}

// 7. Corank sequences: start at k+l, weakly increasing with weakly decreasing
//    differences, stabilize at 2u-r by s = u, for all cells with u <= 14.
void criterion7() {
    long long seqs = 0;
    for (int u = 3; u <= 14; ++u)
        for (int r = 2; r < u; ++r)
            for (int k = 1; k <= r - 1; ++k)
                for (int l = 1; l <= u - r; ++l) {
                    ++seqs;
                    const auto seq = corank_sequence(u, r, k, l).values;
                    bool ok = !seq.empty() && seq.front() == k + l && seq.back() == 2 * u - r &&
                              int(seq.size()) <= u;
                    int prev_diff = ok ? seq[0] : 0;
                    for (std::size_t i = 0; ok && i + 1 < seq.size(); ++i) {
                        const int diff = seq[i + 1] - seq[i];
                        ok = seq[i + 1] >= seq[i] && diff <= prev_diff;
                        prev_diff = diff;
                    }
                    if (!ok)
                        return report(7, "corank sequence shape", false,
                                      "bad sequence at u=" + std::to_string(u) +
                                          " r=" + std::to_string(r) + " k=" + std::to_string(k) +
                                          " l=" + std::to_string(l));
                }
    report(7, "corank sequence shape", true, std::to_string(seqs) + " sequences, u <= 14");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (g_failures) {
        std::printf("ACCEPTANCE: %d criteria FAILED\n", g_failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all 7 criteria passed\n");
    return 0;
}
