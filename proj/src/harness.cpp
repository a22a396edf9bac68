#include "geodetic/harness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace geodetic {

namespace {

// Calls visit(parts) for every composition of `total` into `count` positive
// parts, in lexicographic order.
void for_each_composition(int total, int count, std::vector<int>& parts,
                          const std::function<void(const std::vector<int>&)>& visit) {
    if (count == 1) {
        parts.push_back(total);
        visit(parts);
        parts.pop_back();
        return;
    }
    for (int first = 1; first <= total - (count - 1); ++first) {
        parts.push_back(first);
        for_each_composition(total - first, count - 1, parts, visit);
        parts.pop_back();
    }
}

// Lexicographic tuples with chords[i] in [1, limit[i]].
void for_each_chord_tuple(const std::vector<int>& limit, std::vector<int>& chords,
                          const std::function<void(const std::vector<int>&)>& visit) {
    if (chords.size() == limit.size()) {
        visit(chords);
        return;
    }
    for (int c = 1; c <= limit[chords.size()]; ++c) {
        chords.push_back(c);
        for_each_chord_tuple(limit, chords, visit);
        chords.pop_back();
    }
}

}  // namespace

void for_each_spec(const SweepBounds& bounds, const std::function<void(const EnumeratedSpec&)>& visit) {
    if (bounds.L_max < 2) throw std::invalid_argument("L_max must be at least 2");
    for (int L = 2; L <= bounds.L_max; ++L) {
        for (int n = 2; n <= L; ++n) {
            std::vector<int> parts;
            for_each_composition(2 * L, 2 * n, parts, [&](const std::vector<int>& arcs) {
                // Chord i must be shorter than both arcs between its ends.
                std::vector<int> limit(n);
                for (int i = 0; i < n; ++i) {
                    const int forward = std::accumulate(arcs.begin() + i, arcs.begin() + n + i, 0);
                    limit[i] = std::min(forward, 2 * L - forward) - 1;
                }
                std::vector<int> chords;
                for_each_chord_tuple(limit, chords, [&](const std::vector<int>& tuple) {
                    EnumeratedSpec item{{L, n, arcs, tuple}, false};
                    item.conditions_hold = conditions_hold(item.spec);
                    if (item.conditions_hold || bounds.include_invalid) visit(item);
                });
            });
        }
    }
}

std::vector<EnumeratedSpec> enumerate_specs(const SweepBounds& bounds) {
    std::vector<EnumeratedSpec> out;
    for_each_spec(bounds, [&out](const EnumeratedSpec& item) { out.push_back(item); });
    return out;
}

bool pair_property(const EmbeddedGraph& h, const GeodesicProfile& profile, std::vector<PairViolation>* violations) {
    const auto cycle_len = static_cast<VertexId>(2 * h.spec.L);
    const auto half = static_cast<VertexId>(h.spec.L);
    bool holds = true;
    for (VertexId u = 0; u < cycle_len; ++u) {
        for (VertexId v = u + 1; v < cycle_len; ++v) {
            const bool opposite = v - u == half;
            const auto d = profile.distance(u, v);
            const auto k = profile.count(u, v);
            if (k == 1 && (!opposite || d < half)) continue;
            holds = false;
            if (violations && violations->size() < SweepFinding::kMaxReportedViolations) {
                violations->push_back({u, v, d, k, opposite});
            }
        }
    }
    return holds;
}

SweepFinding validate_one(const EmbeddedSpec& spec) {
    const auto h = build(spec);
    SweepFinding f;
    f.spec = spec;
    f.report = evaluate(h);
    const auto profile = count_geodesics(h.graph);
    f.oracle_class = classify_k(profile);
    f.oracle_witness = profile.witness_pair();
    f.pair_property_holds = pair_property(h, profile, &f.violations);

    auto disagree = [&f](std::string what) {
        f.agrees_with_paper = false;
        f.disagreements.push_back(std::move(what));
    };
    const auto k = profile.k_value();
    if (f.report.conditions_hold()) {
        if (spec.n == 2 && k != 1) disagree("two-chord graph satisfying both conditions has K=" + std::to_string(k));
        if (spec.n >= 3 && k > 2) disagree("graph satisfying both conditions has K=" + std::to_string(k) + " > 2");
        if (!f.pair_property_holds) disagree("both conditions hold but some pair on C lacks a unique short geodesic");
    } else if (f.pair_property_holds) {
        disagree("a condition fails yet every pair on C keeps a unique short geodesic");
    }
    if (f.report.condition2.holds) {
        const int chord_sum = std::accumulate(spec.chords.begin(), spec.chords.end(), 0);
        if (chord_sum != spec.L * (spec.n - 1)) {
            disagree("condition 2 holds but chord lengths sum to " + std::to_string(chord_sum));
        }
    }
    return f;
}

SweepSummary sweep_validate(const SweepBounds& bounds, const SweepOptions& options,
                            const std::function<void(const SweepFinding&)>& sink) {
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    const std::size_t chunk = std::max<std::size_t>(1, options.chunk);
    SweepSummary summary;
    std::vector<EmbeddedSpec> pending;
    std::vector<SweepFinding> results;

    auto flush = [&] {
        results.assign(pending.size(), {});
        const std::size_t workers = std::min<std::size_t>(threads, pending.size());
        if (workers <= 1) {
            for (std::size_t i = 0; i < pending.size(); ++i) results[i] = validate_one(pending[i]);
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    for (std::size_t i = w; i < pending.size(); i += workers) results[i] = validate_one(pending[i]);
                });
            }
        }
        for (const auto& f : results) {
            ++summary.specs;
            if (f.report.conditions_hold()) ++summary.conditions_hold;
            switch (f.oracle_class.kind) {
                case GeodeticKind::Geodetic: ++summary.geodetic; break;
                case GeodeticKind::Bigeodetic: ++summary.bigeodetic; break;
                default: ++summary.higher; break;
            }
            if (!f.agrees_with_paper) ++summary.disagreements;
            sink(f);
        }
        pending.clear();
    };

    for_each_spec(bounds, [&](const EnumeratedSpec& item) {
        pending.push_back(item.spec);
        if (pending.size() == chunk) flush();
    });
    flush();
    return summary;
}

std::vector<SweepFinding> sweep_validate(const SweepBounds& bounds) {
    std::vector<SweepFinding> out;
    sweep_validate(bounds, SweepOptions{}, [&out](const SweepFinding& f) { out.push_back(f); });
    return out;
}

namespace {

struct CandidateChord {
    std::size_t from = 0;  ///< cycle position, from < to
    std::size_t to = 0;
    std::vector<VertexId> path;  ///< host vertices, from C[from] to C[to]

    std::size_t length() const { return path.size() - 1; }
};

class ChordSearch {
public:
    ChordSearch(const Graph& g, const CycleView& c, const ChordSearchLimits& limits)
        : g_(g), c_(c), limits_(limits), m_(c.length()), half_(c.length() / 2), position_(g.vertex_count(), kOff) {
        for (std::size_t i = 0; i < m_; ++i) position_[c.at(i)] = i;
    }

    ChordSearchResult run() {
        collect_candidates();
        result_.candidate_paths = candidates_.size();
        complete_ = complete_ && choose(0);
        result_.search_exhausted = complete_ && !result_.system;
        return std::move(result_);
    }

private:
    static constexpr std::size_t kOff = static_cast<std::size_t>(-1);

    void collect_candidates() {
        std::vector<bool> on_path(g_.vertex_count(), false);
        std::vector<std::size_t> per_pair(m_ * m_, 0);
        std::vector<VertexId> path;
        for (std::size_t p = 0; p < m_; ++p) {
            path = {c_.at(p)};
            on_path[c_.at(p)] = true;
            extend(p, path, on_path, per_pair);
            on_path[c_.at(p)] = false;
        }
        std::sort(candidates_.begin(), candidates_.end(), [](const CandidateChord& a, const CandidateChord& b) {
            return std::tie(a.from, a.to, a.path) < std::tie(b.from, b.to, b.path);
        });
    }

    // Chords are shorter than both arcs, hence at most half_ - 1 edges long.
    void extend(std::size_t from, std::vector<VertexId>& path, std::vector<bool>& on_path, std::vector<std::size_t>& per_pair) {
        const std::size_t len = path.size();  // edges after the next step
        if (len > half_ - 1) return;
        for (VertexId w : g_.neighbors(path.back())) {
            if (on_path[w]) continue;
            const std::size_t q = position_[w];
            if (q != kOff) {
                if (q <= from || len >= c_.arc_distance(from, q)) continue;
                auto& seen = per_pair[from * m_ + q];
                if (seen == limits_.max_paths_per_pair) {
                    complete_ = false;
                    continue;
                }
                ++seen;
                path.push_back(w);
                candidates_.push_back({from, q, path});
                path.pop_back();
                continue;
            }
            on_path[w] = true;
            path.push_back(w);
            extend(from, path, on_path, per_pair);
            path.pop_back();
            on_path[w] = false;
        }
    }

    bool crosses(const CandidateChord& a, const CandidateChord& b) const {
        const auto inside = [&a](std::size_t x) { return a.from < x && x < a.to; };
        return inside(b.from) != inside(b.to);
    }

    bool disjoint(const CandidateChord& a, const CandidateChord& b) const {
        for (VertexId x : a.path) {
            if (std::find(b.path.begin(), b.path.end(), x) != b.path.end()) return false;
        }
        return true;
    }

    // Returns false when the combination cap stops the search.
    bool choose(std::size_t start) {
        for (std::size_t idx = start; idx < candidates_.size(); ++idx) {
            const auto& cand = candidates_[idx];
            const bool fits = std::all_of(chosen_.begin(), chosen_.end(), [&](std::size_t k) {
                return crosses(candidates_[k], cand) && disjoint(candidates_[k], cand);
            });
            if (!fits) continue;
            chosen_.push_back(idx);
            if (chosen_.size() >= 2) {
                if (result_.combinations == limits_.max_combinations) {
                    chosen_.pop_back();
                    return false;
                }
                ++result_.combinations;
                if (try_chosen()) return true;
            }
            if (chosen_.size() < half_ && !choose(idx + 1)) {
                chosen_.pop_back();
                return false;
            }
            chosen_.pop_back();
            if (result_.system) return true;
        }
        return true;
    }

    // Reads the chosen chords as a spec anchored at the lowest endpoint.
    bool try_chosen() {
        const int n = static_cast<int>(chosen_.size());
        std::vector<std::pair<std::size_t, std::size_t>> ends;  // (position, chosen index)
        for (std::size_t k = 0; k < chosen_.size(); ++k) {
            ends.emplace_back(candidates_[chosen_[k]].from, k);
            ends.emplace_back(candidates_[chosen_[k]].to, k);
        }
        std::sort(ends.begin(), ends.end());

        EmbeddedSpec spec{static_cast<int>(half_), n, {}, {}};
        for (int k = 0; k < 2 * n; ++k) {
            const std::size_t next = k + 1 < 2 * n ? ends[k + 1].first : ends[0].first + m_;
            spec.arcs.push_back(static_cast<int>(next - ends[k].first));
        }
        for (int i = 0; i < n; ++i) spec.chords.push_back(static_cast<int>(candidates_[chosen_[ends[i].second]].length()));
        if (!validate_spec(spec).ok() || !conditions_hold(spec)) return false;

        ChordSystem system{build(spec), {}};
        system.host_map.resize(system.embedded.graph.vertex_count());
        const std::size_t anchor = ends[0].first;
        for (std::size_t k = 0; k < m_; ++k) system.host_map[k] = c_.at(anchor + k);
        for (int i = 0; i < n; ++i) {
            const auto& cand = candidates_[chosen_[ends[i].second]];
            auto host_path = cand.path;
            if (cand.from != ends[i].first) std::reverse(host_path.begin(), host_path.end());
            const auto& local = system.embedded.chord_paths[i];
            for (std::size_t s = 1; s + 1 < local.size(); ++s) system.host_map[local[s]] = host_path[s];
        }
        result_.system = std::move(system);
        return true;
    }

    const Graph& g_;
    const CycleView& c_;
    const ChordSearchLimits& limits_;
    std::size_t m_;
    std::size_t half_;
    std::vector<std::size_t> position_;
    std::vector<CandidateChord> candidates_;
    std::vector<std::size_t> chosen_;
    bool complete_ = true;
    ChordSearchResult result_;
};

}  // namespace

ChordSearchResult find_chord_system(const Graph& g, const CycleView& c, const ChordSearchLimits& limits) {
    if (!c.is_even()) throw std::invalid_argument("chord search needs an even cycle");
    (void)CycleView::in_graph(g, c.vertices());
    return ChordSearch(g, c, limits).run();
}

Corollary4Report corollary4_check(const Graph& g, const ChordSearchLimits& limits) {
    if (!is_connected(g)) throw std::domain_error("corollary4_check needs a connected graph");
    Corollary4Report report;
    report.oracle_class = classify_k(count_geodesics(g));
    const std::size_t cap = limits.max_cycle_len ? limits.max_cycle_len : g.vertex_count();
    if (cap < 4) return report;

    auto minimal = minimal_even_cycles(g, cap);
    report.minimal_even_length = minimal.length;
    if (minimal.cycles.size() > limits.max_cycles) {
        minimal.cycles.erase(minimal.cycles.begin() + static_cast<std::ptrdiff_t>(limits.max_cycles), minimal.cycles.end());
        report.cycles_truncated = true;
    }
    for (auto& c : minimal.cycles) {
        auto search = find_chord_system(g, c, limits);
        Corollary4Verdict verdict{std::move(c), std::move(search.system), false, search.search_exhausted};
        verdict.certified_nongeodetic = verdict.search_exhausted && !verdict.chord_system_found;
        report.certified_nongeodetic = report.certified_nongeodetic || verdict.certified_nongeodetic;
        report.verdicts.push_back(std::move(verdict));
    }
    report.sound = !report.certified_nongeodetic || report.oracle_class.k >= 2;
    return report;
}

}  // namespace geodetic
