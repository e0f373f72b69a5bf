#include "a3res/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

namespace a3res {

std::string SchurTriple::to_string() const {
    return w1.to_string() + ";" + w2.to_string() + ";" + w3.to_string();
}

std::vector<BettiEntry> BettiTable::degree(int i) const {
    std::vector<BettiEntry> out;
    for (const auto& e : entries)
        if (e.i == i) out.push_back(e);
    return out;
}

int BettiTable::top_degree() const {
    int top = -1;
    for (const auto& e : entries) top = std::max(top, e.i);
    return top;
}

BigInt BettiTable::total_dim(int i) const {
    BigInt s = 0;
    for (const auto& e : entries)
        if (e.i == i) s += e.dim;
    return s;
}

namespace {

constexpr std::size_t kKeptViolations = 16;

// One outer block (0^zeros, p) after Bott, with what the pruning bound needs.
struct OuterBlock {
    Partition p;
    Partition conj;
    std::vector<int> conj_prefix;  // conj_prefix[w] = sum of the first w conjugate parts
    Partition normalized;
    int exchanges = 0;
    int moved_rows = 0;  // u with exchanges = u * zeros
};

std::vector<OuterBlock> outer_blocks(int rows, int cols, int zeros) {
    std::vector<OuterBlock> out;
    for (auto& p : partitions_in_box(rows, cols)) {
        const auto res = normalize_prefixed(zeros, p);
        if (!res) continue;
        OuterBlock b;
        b.conj = conjugate(p);
        b.conj_prefix.assign(static_cast<std::size_t>(cols) + 1, 0);
        for (int w = 1; w <= cols; ++w)
            b.conj_prefix[static_cast<std::size_t>(w)] = b.conj_prefix[static_cast<std::size_t>(w - 1)] + b.conj[static_cast<std::size_t>(w - 1)];
        b.normalized = res->weight.to_partition();
        b.exchanges = res->exchanges;
        b.moved_rows = zeros > 0 ? res->exchanges / zeros : 0;
        b.p = std::move(p);
        out.push_back(std::move(b));
    }
    return out;
}

using Key = std::tuple<int, int, SchurTriple>;  // (i, t, triple)
using EntryMap = std::map<Key, std::uint64_t>;

struct Worker {
    const FlagData& flag;
    const ResolutionOptions& opts;
    EntryMap entries;
    EngineAudit audit;

    // Smallest D any nu can give for this pair: D decreases with the number w
    // of moved sink rows, and w rows can only move if the first w parts of nu
    // reach w + beta3, while nu is dominated by conj(lambda) + conj(mu).
    int degree_lower_bound(const OuterBlock& l, const OuterBlock& m, int t) const {
        const int g3 = flag.gamma[2], b3 = flag.beta[2];
        int w_max = 0;
        if (b3 > 0)
            for (int w = 1; w <= g3; ++w)
                if (w * (w + b3) <= l.conj_prefix[static_cast<std::size_t>(w)] + m.conj_prefix[static_cast<std::size_t>(w)]) w_max = w;
        return t - l.exchanges - m.exchanges - w_max * b3;
    }

    void visit(const OuterBlock& l, const OuterBlock& m) {
        const int g3 = flag.gamma[2], b3 = flag.beta[2];
        const int t = l.p.size() + m.p.size();
        ++audit.pairs_visited;
        if (opts.max_degree && degree_lower_bound(l, m, t) > *opts.max_degree) {
            ++audit.pairs_pruned;
            return;
        }
        const auto lr = LRCache::global().get(l.conj, m.conj, g3);
        for (const auto& [nu, coeff] : *lr) {
            ++audit.triples_enumerated;
            const auto sink = bott_rho_oracle(negated_reversed_block(nu, g3, b3));
            if (!sink) continue;
            ++audit.triples_nonvanishing;
            const int n3 = sink->exchanges;
            const int N = l.exchanges + m.exchanges + n3;
            const int D = t - N;
            const int w = b3 > 0 ? n3 / b3 : 0;
            const int bound = quadratic_uvw(l.moved_rows, m.moved_rows, w);
            if (D < bound) {
                ++audit.violation_count;
                if (audit.violations.size() < kKeptViolations)
                    audit.violations.push_back({l.p, m.p, nu, D, l.moved_rows, m.moved_rows, w});
            }
            if (D < 0) ++audit.negative_degree;
            if (opts.max_degree && D > *opts.max_degree) continue;
            SchurTriple triple{l.normalized, m.normalized, dual_weight(sink->weight).to_partition()};
            entries[Key{D, t, std::move(triple)}] += coeff;
        }
    }
};

void merge_audit(EngineAudit& into, const EngineAudit& from) {
    into.pairs_visited += from.pairs_visited;
    into.pairs_pruned += from.pairs_pruned;
    into.triples_enumerated += from.triples_enumerated;
    into.triples_nonvanishing += from.triples_nonvanishing;
    into.negative_degree += from.negative_degree;
    into.violation_count += from.violation_count;
    for (const auto& v : from.violations)
        if (into.violations.size() < kKeptViolations) into.violations.push_back(v);
}

BigInt entry_dim(const SchurTriple& s, const std::array<int, 3>& alpha, std::uint64_t mult) {
    return weyl_dimension(s.w1, alpha[0]) * weyl_dimension(s.w2, alpha[1]) * weyl_dimension(s.w3, alpha[2]) * mult;
}

}  // namespace

BettiTable compute_resolution(const FlagData& f, const ResolutionOptions& opts) {
    BettiTable tbl;
    tbl.flag = f;
    tbl.mult = f.as_reineke();
    const XiBundle xi = xi_of(f);
    tbl.xi_dim = xi.t;
    tbl.flag_dim = xi.m;
    tbl.max_degree = opts.max_degree;

    const auto lambdas = outer_blocks(f.beta[0], f.gamma[2], f.gamma[0]);
    const auto mus = outer_blocks(f.beta[1], f.gamma[2], f.gamma[1]);

    const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(lambdas.size())));
    std::vector<Worker> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) workers.push_back(Worker{f, opts, {}, {}});

    auto run = [&](int j) {
        // strided split keeps large and small lambdas spread across workers
        for (std::size_t k = static_cast<std::size_t>(j); k < lambdas.size(); k += static_cast<std::size_t>(jobs))
            for (const auto& m : mus) workers[static_cast<std::size_t>(j)].visit(lambdas[k], m);
    };
    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(run, j);
    }

    EntryMap merged;
    for (auto& w : workers) {
        for (auto& [key, c] : w.entries) merged[key] += c;
        merge_audit(tbl.audit, w.audit);
    }

    const auto alpha = f.alpha();
    tbl.entries.reserve(merged.size());
    for (auto& [key, c] : merged) {
        const auto& [i, t, triple] = key;
        BettiEntry e{i, t, t - i, triple, c, entry_dim(triple, alpha, c)};
        if (e.dim == 0) continue;
        tbl.entries.push_back(std::move(e));
    }
    return tbl;
}

std::vector<CauchySummand> exterior_power_summands(const FlagData& f, int t) {
    const int g3 = f.gamma[2], b3 = f.beta[2];
    const auto alpha = f.alpha();
    std::vector<CauchySummand> out;
    for (const auto& l : partitions_in_box(f.beta[0], g3)) {
        if (l.size() > t) continue;
        for (const auto& m : partitions_in_box(f.beta[1], g3)) {
            if (l.size() + m.size() != t) continue;
            for (const auto& [nu, coeff] : lr_expand(conjugate(l), conjugate(m), g3)) {
                CauchySummand s;
                s.lambda = l;
                s.mu = m;
                s.nu = nu;
                s.coefficient = coeff;
                s.block1.assign(static_cast<std::size_t>(f.gamma[0]), 0);
                for (int k = 0; k < f.beta[0]; ++k) s.block1.push_back(l[static_cast<std::size_t>(k)]);
                s.block2.assign(static_cast<std::size_t>(f.gamma[1]), 0);
                for (int k = 0; k < f.beta[1]; ++k) s.block2.push_back(m[static_cast<std::size_t>(k)]);
                s.block3 = negated_reversed_block(nu, g3, b3);
                const auto r1 = bott_rho_oracle(s.block1);
                const auto r2 = bott_rho_oracle(s.block2);
                const auto r3 = bott_rho_oracle(s.block3);
                if (r1 && r2 && r3) {
                    const int N = r1->exchanges + r2->exchanges + r3->exchanges;
                    SchurTriple triple{r1->weight.to_partition(), r2->weight.to_partition(),
                                       dual_weight(r3->weight).to_partition()};
                    BigInt dim = entry_dim(triple, alpha, coeff);
                    s.contribution = BettiEntry{t - N, t, N, std::move(triple), coeff, std::move(dim)};
                }
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

std::optional<BettiEntry> top_term(const FlagData& f) {
    const XiBundle xi = xi_of(f);
    if (xi.t == 0) return BettiEntry{0, 0, 0, SchurTriple{}, 1, 1};
    const auto blocks = top_weight(f);
    const auto r1 = bott_rho_oracle(blocks[0]);
    const auto r2 = bott_rho_oracle(blocks[1]);
    const auto r3 = bott_rho_oracle(blocks[2]);
    if (!r1 || !r2 || !r3) return std::nullopt;
    const int N = r1->exchanges + r2->exchanges + r3->exchanges;
    SchurTriple triple{r1->weight.to_partition(), r2->weight.to_partition(), dual_weight(r3->weight).to_partition()};
    BigInt dim = entry_dim(triple, f.alpha(), 1);
    return BettiEntry{xi.t - N, xi.t, N, std::move(triple), 1, std::move(dim)};
}

}  // namespace a3res
