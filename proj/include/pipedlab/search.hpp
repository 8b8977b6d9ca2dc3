#pragma once

// Bounded enumeration engine. Three integer basis lengths and one
// two-integer-diagonal parallelogram per face assemble into tetrahedron
// sextuples (eight diagonal combinations per parallelogram triple); every
// emitted piped therefore has all six face diagonals rational. Degenerate
// (zero volume) configurations are kept and flagged; negative Gram
// determinants are silently skipped. Records are deduplicated by canonical
// family representative, which is sound per basis triple because the basis
// multiset is a family invariant.
//
// Work is partitioned by the largest basis length; unit results merge in
// ascending order, so output is deterministic for any worker count. The
// final record file is globally sorted by canonical sextuple.

#include "pipedlab/classify.hpp"
#include "pipedlab/family.hpp"
#include "pipedlab/signature.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace pipedlab {

struct SearchConfig {
    std::int64_t max_basis = 0;
    std::optional<PipedClass> class_filter;
    bool perfect_only = false;
    bool rational_volume_only = false;
    int workers = 0;  // 0: PIPEDLAB_THREADS env var, then hardware concurrency
    std::int64_t checkpoint_interval = 25;  // units between durable checkpoints
    std::string out_path;                   // records JSONL; empty: skip
    std::string checkpoint_path;            // empty: no checkpointing
    bool resume = false;
    std::int64_t stop_after_units = 0;  // test hook; 0 = run to completion
};

struct SearchRecord {
    EdgeSextuple edges;  // canonical family representative
    PipedClass cls = PipedClass::acute;
    std::string sig;  // 27 chars
    CategoryKey category;
    Rational volume_squared;
};

struct SurveyResult {
    std::map<PipedClass, std::uint64_t> class_tally;
    std::map<CategoryKey, std::uint64_t> category_tally;
    std::uint64_t combos = 0;  // assembled sextuples before dedup/filters
    std::vector<SearchRecord> records;
    bool completed = true;
    std::int64_t last_unit = 0;
};

namespace detail {

using I128 = __int128;

inline int survey_workers(int configured) {
    if (configured > 0) return configured;
    if (const char* env = std::getenv("PIPEDLAB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

struct DiagPair {
    std::int64_t lo, hi;  // lo <= hi; lo == 0 only for equal sides
};

// Integer-diagonal parallelograms per unordered side pair (A, B), A <= B.
// Every pair list contains at least the fully degenerate (B-A, A+B).
class PairTable {
  public:
    explicit PairTable(std::int64_t max_basis) : n_(max_basis) {
        table_.resize(static_cast<size_t>(n_ * (n_ + 1) / 2));
        for (std::int64_t b = 1; b <= n_; ++b) {
            for (std::int64_t a = 1; a <= b; ++a) {
                auto& list = table_[index(a, b)];
                const std::int64_t ss2 = 2 * (a * a + b * b);
                for (std::int64_t d = b - a; d * d <= a * a + b * b; ++d) {
                    std::int64_t partner_sq = ss2 - d * d;
                    std::uint64_t r =
                        isqrt_u64(static_cast<std::uint64_t>(partner_sq));
                    if (static_cast<std::int64_t>(r) * static_cast<std::int64_t>(r) ==
                        partner_sq)
                        list.push_back({d, static_cast<std::int64_t>(r)});
                }
            }
        }
    }

    const std::vector<DiagPair>& at(std::int64_t a, std::int64_t b) const {
        return table_[index(a, b)];
    }

  private:
    size_t index(std::int64_t a, std::int64_t b) const {
        return static_cast<size_t>((b - 1) * b / 2 + (a - 1));
    }
    std::int64_t n_;
    std::vector<std::vector<DiagPair>> table_;
};

using Row6 = std::array<std::int64_t, 6>;

struct FaceChoice {
    std::int64_t chosen, other;
};

// Lexicographically least family row, over 6 basis orderings x 4 even
// substitution patterns, skipping rows with a zero entry. Matches
// pipedlab::canonical_form on the assembled sextuple.
inline Row6 canonical_row(std::int64_t A, std::int64_t B, std::int64_t C,
                          const FaceChoice& ab, const FaceChoice& ac,
                          const FaceChoice& bc) {
    const std::array<std::int64_t, 3> basis = {A, B, C};
    // face index by unordered basis-slot pair: {0,1}->0, {0,2}->1, {1,2}->2
    const std::array<FaceChoice, 3> face = {ab, ac, bc};
    static constexpr std::array<std::array<int, 3>, 6> orders = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    static constexpr std::array<std::array<bool, 3>, 4> subs = {{
        {false, false, false},
        {false, true, true},
        {true, false, true},
        {true, true, false},
    }};
    auto face_of = [](int i, int j) {
        int lo = std::min(i, j), hi = std::max(i, j);
        return lo + hi - 1;
    };
    Row6 best{};
    bool have = false;
    for (const auto& ord : orders) {
        const std::array<int, 3> fidx = {face_of(ord[0], ord[1]),
                                         face_of(ord[0], ord[2]),
                                         face_of(ord[1], ord[2])};
        for (const auto& sub : subs) {
            Row6 row = {basis[ord[0]], 0, basis[ord[1]], 0, basis[ord[2]], 0};
            bool ok = true;
            for (int slot = 0; slot < 3; ++slot) {
                const FaceChoice& fc = face[fidx[slot]];
                std::int64_t val = sub[slot] ? fc.other : fc.chosen;
                if (val == 0) {
                    ok = false;
                    break;
                }
                row[static_cast<size_t>(2 * slot + 1)] = val;
            }
            if (!ok) continue;
            if (!have || row < best) {
                best = row;
                have = true;
            }
        }
    }
    return best;
}

// Calls fn(A, B, C, ab, ac, bc, det8) for every valid assembled combo whose
// largest basis equals unit.
template <class Fn>
void walk_unit(const PairTable& pt, std::int64_t unit, Fn&& fn) {
    const std::int64_t C = unit;
    for (std::int64_t A = 1; A <= C; ++A) {
        const auto& pac = pt.at(A, C);
        if (pac.empty()) continue;
        for (std::int64_t B = A; B <= C; ++B) {
            const auto& pab = pt.at(A, B);
            if (pab.empty()) continue;
            const auto& pbc = pt.at(B, C);
            if (pbc.empty()) continue;
            for (const DiagPair& dab : pab) {
                for (int i = 0; i < 2; ++i) {
                    if (i == 1 && dab.hi == dab.lo) break;
                    FaceChoice ab{i ? dab.hi : dab.lo, i ? dab.lo : dab.hi};
                    if (ab.chosen == 0) continue;
                    for (const DiagPair& dac : pac) {
                        for (int j = 0; j < 2; ++j) {
                            if (j == 1 && dac.hi == dac.lo) break;
                            FaceChoice ac{j ? dac.hi : dac.lo,
                                          j ? dac.lo : dac.hi};
                            if (ac.chosen == 0) continue;
                            for (const DiagPair& dbc : pbc) {
                                for (int k = 0; k < 2; ++k) {
                                    if (k == 1 && dbc.hi == dbc.lo) break;
                                    FaceChoice bc{k ? dbc.hi : dbc.lo,
                                                  k ? dbc.lo : dbc.hi};
                                    if (bc.chosen == 0) continue;
                                    GramCore<I128> g = gram_core<I128>(
                                        A, ab.chosen, B, ac.chosen, C,
                                        bc.chosen);
                                    I128 det8 = det8_core(g);
                                    if (det8 < 0) continue;
                                    fn(A, B, C, ab, ac, bc, g, det8);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

}  // namespace detail

inline std::string record_to_json(const SearchRecord& r) {
    std::ostringstream os;
    os << "{\"edges\":[" << r.edges.a << "," << r.edges.b << "," << r.edges.c
       << "," << r.edges.d << "," << r.edges.e << "," << r.edges.f << "],"
       << "\"class\":\"" << class_name(r.cls) << "\","
       << "\"sig\":\"" << r.sig << "\","
       << "\"vol_flag\":" << r.category.volume << ","
       << "\"vol2\":\"" << to_string(r.volume_squared) << "\","
       << "\"category\":[" << r.category.skew << "," << r.category.face_diag
       << "," << r.category.body_diag << "," << r.category.face_area << ","
       << r.category.body_area << "," << r.category.volume << "]}";
    return os.str();
}

inline void write_category_csv(std::ostream& os,
                               const std::map<CategoryKey, std::uint64_t>& m) {
    os << "skew,face,body,farea,barea,vol,count\n";
    for (const auto& [k, n] : m)
        os << k.skew << "," << k.face_diag << "," << k.body_diag << ","
           << k.face_area << "," << k.body_area << "," << k.volume << "," << n
           << "\n";
}

// Raw assembled sextuples (validity-checked, not deduplicated). Test-scale
// bounds only; run_survey is the streaming pipeline.
inline std::vector<EdgeSextuple> assemble_tetrahedrons(const SearchConfig& cfg) {
    if (cfg.max_basis < 0) throw std::domain_error("max_basis must be >= 0");
    if (cfg.max_basis > 2000)
        throw std::domain_error(
            "max_basis above 2000 is not supported by the in-memory survey");
    detail::PairTable pt(cfg.max_basis);
    std::vector<EdgeSextuple> out;
    for (std::int64_t unit = 1; unit <= cfg.max_basis; ++unit) {
        detail::walk_unit(pt, unit,
                          [&](std::int64_t A, std::int64_t B, std::int64_t C,
                              const detail::FaceChoice& ab,
                              const detail::FaceChoice& ac,
                              const detail::FaceChoice& bc,
                              const GramCore<detail::I128>&, detail::I128) {
                              out.push_back(EdgeSextuple{A, ab.chosen, B,
                                                         ac.chosen, C,
                                                         bc.chosen});
                          });
    }
    return out;
}

namespace detail {

struct UnitOutput {
    std::int64_t unit = 0;
    std::uint64_t combos = 0;
    std::vector<SearchRecord> records;  // sorted by canonical edges
    std::map<PipedClass, std::uint64_t> class_tally;
    std::map<CategoryKey, std::uint64_t> category_tally;
};

inline UnitOutput process_unit(const PairTable& pt, std::int64_t unit,
                               const SearchConfig& cfg) {
    UnitOutput out;
    out.unit = unit;
    std::set<Row6> seen;  // per basis triple; reset when the triple changes
    std::int64_t cur_a = -1, cur_b = -1;
    walk_unit(pt, unit,
              [&](std::int64_t A, std::int64_t B, std::int64_t C,
                  const FaceChoice& ab, const FaceChoice& ac,
                  const FaceChoice& bc, const GramCore<I128>&, I128) {
                  ++out.combos;
                  if (A != cur_a || B != cur_b) {
                      seen.clear();
                      cur_a = A;
                      cur_b = B;
                  }
                  Row6 canon = canonical_row(A, B, C, ab, ac, bc);
                  if (!seen.insert(canon).second) return;

                  GramCore<I128> g = gram_core<I128>(
                      I128(canon[0]), I128(canon[1]), I128(canon[2]),
                      I128(canon[3]), I128(canon[4]), I128(canon[5]));
                  ComponentSignature sig = compute_signature_core(g);
                  PipedClass cls = classify(sign_vector_core(g));
                  // Degenerate planar rows have every diagonal rational but
                  // are census-labeled planar, not perfect.
                  if (cfg.perfect_only && !(is_perfect(sig) && sig.volume != -1))
                      return;
                  if (cfg.class_filter && cls != *cfg.class_filter) return;
                  if (cfg.rational_volume_only && sig.volume != 1) return;

                  SearchRecord rec;
                  rec.edges = EdgeSextuple{canon[0], canon[1], canon[2],
                                           canon[3], canon[4], canon[5]};
                  rec.cls = cls;
                  rec.sig = to_string(sig);
                  rec.category = category_of(sig);
                  BigInt det8 = det8_core(gram_core(rec.edges));
                  rec.volume_squared = Rational(det8, 8);
                  ++out.class_tally[cls];
                  ++out.category_tally[rec.category];
                  out.records.push_back(std::move(rec));
              });
    std::sort(out.records.begin(), out.records.end(),
              [](const SearchRecord& x, const SearchRecord& y) {
                  return x.edges < y.edges;
              });
    return out;
}

// --- checkpoint + journal -------------------------------------------------

inline std::string config_stamp(const SearchConfig& cfg) {
    std::ostringstream os;
    os << "max_basis=" << cfg.max_basis << " perfect=" << cfg.perfect_only
       << " class="
       << (cfg.class_filter ? std::string(class_name(*cfg.class_filter)) : "*")
       << " rational_volume=" << cfg.rational_volume_only;
    return os.str();
}

inline std::string journal_path(const SearchConfig& cfg) {
    return cfg.checkpoint_path + ".records";
}

inline std::string record_to_journal(std::int64_t unit, const SearchRecord& r) {
    std::ostringstream os;
    os << unit << '\t' << r.edges.a << ' ' << r.edges.b << ' ' << r.edges.c
       << ' ' << r.edges.d << ' ' << r.edges.e << ' ' << r.edges.f << '\t'
       << class_name(r.cls) << '\t' << r.sig << '\t' << r.category.skew << ' '
       << r.category.face_diag << ' ' << r.category.body_diag << ' '
       << r.category.face_area << ' ' << r.category.body_area << ' '
       << r.category.volume << '\t' << to_string(r.volume_squared);
    return os.str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

inline bool record_from_journal(const std::string& line, std::int64_t& unit,
                                SearchRecord& rec) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t tab = line.find('\t', start);
        parts.push_back(line.substr(start, tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    if (parts.size() != 6) return false;
    try {
        unit = std::stoll(parts[0]);
        std::istringstream es(parts[1]);
        std::array<BigInt, 6> e;
        for (auto& x : e) {
            std::string tok;
            if (!(es >> tok)) return false;
            x = BigInt(tok);
        }
        rec.edges = EdgeSextuple{e[0], e[1], e[2], e[3], e[4], e[5]};
        auto cls = class_from_name(parts[2]);
        if (!cls) return false;
        rec.cls = *cls;
        rec.sig = parts[3];
        std::istringstream cs(parts[4]);
        if (!(cs >> rec.category.skew >> rec.category.face_diag >>
              rec.category.body_diag >> rec.category.face_area >>
              rec.category.body_area >> rec.category.volume))
            return false;
        rec.volume_squared = rational_from_string(parts[5]);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

inline void atomic_write(const std::string& path, const std::string& body) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc | std::ios::binary);
        if (!os) throw std::runtime_error("cannot write " + tmp);
        os << body;
        os.flush();
        if (!os) throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot replace " + path);
}

struct CheckpointState {
    std::int64_t last_unit = 0;
    std::uint64_t combos = 0;
    std::map<PipedClass, std::uint64_t> class_tally;
    std::map<CategoryKey, std::uint64_t> category_tally;
};

inline void write_checkpoint(const SearchConfig& cfg,
                             const CheckpointState& st) {
    std::ostringstream os;
    os << "pipedlab-checkpoint 1\n";
    os << "config " << config_stamp(cfg) << "\n";
    os << "unit " << st.last_unit << "\n";
    os << "combos " << st.combos << "\n";
    for (const auto& [cls, n] : st.class_tally)
        os << "class " << class_name(cls) << " " << n << "\n";
    for (const auto& [k, n] : st.category_tally)
        os << "cat " << k.skew << "," << k.face_diag << "," << k.body_diag
           << "," << k.face_area << "," << k.body_area << "," << k.volume
           << " " << n << "\n";
    os << "end\n";
    atomic_write(cfg.checkpoint_path, os.str());
}

inline CheckpointState read_checkpoint(const SearchConfig& cfg) {
    std::ifstream is(cfg.checkpoint_path);
    if (!is)
        throw std::runtime_error("cannot open checkpoint " +
                                 cfg.checkpoint_path);
    CheckpointState st;
    std::string line;
    if (!std::getline(is, line) || line != "pipedlab-checkpoint 1")
        throw std::runtime_error("unrecognized checkpoint format");
    bool saw_end = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "config") {
            std::string rest = line.substr(7);
            if (rest != config_stamp(cfg))
                throw std::runtime_error(
                    "checkpoint was written with a different configuration: " +
                    rest);
        } else if (tag == "unit") {
            ls >> st.last_unit;
        } else if (tag == "combos") {
            ls >> st.combos;
        } else if (tag == "class") {
            std::string name;
            std::uint64_t n;
            ls >> name >> n;
            auto cls = class_from_name(name);
            if (!cls) throw std::runtime_error("bad class line in checkpoint");
            st.class_tally[*cls] = n;
        } else if (tag == "cat") {
            std::string key;
            std::uint64_t n;
            ls >> key >> n;
            CategoryKey k;
            if (std::sscanf(key.c_str(), "%d,%d,%d,%d,%d,%d", &k.skew,
                            &k.face_diag, &k.body_diag, &k.face_area,
                            &k.body_area, &k.volume) != 6)
                throw std::runtime_error("bad cat line in checkpoint");
            st.category_tally[k] = n;
        } else if (tag == "end") {
            saw_end = true;
        }
    }
    if (!saw_end) throw std::runtime_error("truncated checkpoint file");
    return st;
}

}  // namespace detail

inline SurveyResult run_survey(const SearchConfig& cfg) {
    if (cfg.max_basis < 0) throw std::domain_error("max_basis must be >= 0");
    if (cfg.max_basis > 2000)
        throw std::domain_error(
            "max_basis above 2000 is not supported by the in-memory survey");

    detail::CheckpointState st;
    std::vector<SearchRecord> records;

    // Resume: reload tallies and the journaled records of completed units.
    std::vector<std::string> journal_lines;
    if (cfg.resume) {
        if (cfg.checkpoint_path.empty())
            throw std::runtime_error("--resume requires a checkpoint path");
        st = detail::read_checkpoint(cfg);
        std::ifstream js(detail::journal_path(cfg));
        std::string line;
        while (js && std::getline(js, line)) {
            if (line.empty()) continue;
            std::int64_t unit = 0;
            SearchRecord rec;
            if (!detail::record_from_journal(line, unit, rec))
                throw std::runtime_error("corrupt journal line: " + line);
            if (unit <= st.last_unit) {
                journal_lines.push_back(line);
                records.push_back(std::move(rec));
            }
        }
    }

    SurveyResult result;
    result.completed = true;

    const std::int64_t first_unit = st.last_unit + 1;
    const std::int64_t last_unit = cfg.max_basis;

    std::ofstream journal;
    if (!cfg.checkpoint_path.empty()) {
        // Rewrite the journal to drop any lines past the checkpoint token.
        std::ostringstream body;
        for (const auto& l : journal_lines) body << l << "\n";
        detail::atomic_write(detail::journal_path(cfg), body.str());
        journal.open(detail::journal_path(cfg), std::ios::app);
    }

    if (first_unit <= last_unit) {
        detail::PairTable pt(cfg.max_basis);
        const int nworkers = detail::survey_workers(cfg.workers);

        std::mutex mu;
        std::condition_variable cv;
        std::map<std::int64_t, detail::UnitOutput> ready;
        std::atomic<std::int64_t> next_unit{first_unit};
        std::atomic<std::int64_t> next_needed{first_unit};
        std::atomic<bool> stop{false};
        const size_t max_pending =
            static_cast<size_t>(std::max(8, 4 * nworkers));

        auto worker = [&]() {
            for (;;) {
                if (stop.load(std::memory_order_relaxed)) return;
                std::int64_t unit = next_unit.fetch_add(1);
                if (unit > last_unit) return;
                detail::UnitOutput out = detail::process_unit(pt, unit, cfg);
                std::unique_lock<std::mutex> lock(mu);
                // keep the pending map bounded, but never hold back the unit
                // the aggregator is waiting on
                cv.wait(lock, [&] {
                    return stop.load() || ready.size() < max_pending ||
                           unit == next_needed.load();
                });
                if (stop.load()) return;
                ready.emplace(unit, std::move(out));
                cv.notify_all();
            }
        };
        std::vector<std::thread> threads;
        threads.reserve(static_cast<size_t>(nworkers));
        for (int i = 0; i < nworkers; ++i) threads.emplace_back(worker);

        std::int64_t consumed = 0;
        std::int64_t since_checkpoint = 0;
        for (std::int64_t unit = first_unit; unit <= last_unit; ++unit) {
            detail::UnitOutput out;
            {
                std::unique_lock<std::mutex> lock(mu);
                cv.wait(lock, [&] { return ready.count(unit) > 0; });
                out = std::move(ready.at(unit));
                ready.erase(unit);
                next_needed.store(unit + 1);
                cv.notify_all();
            }
            st.combos += out.combos;
            for (const auto& [cls, n] : out.class_tally)
                st.class_tally[cls] += n;
            for (const auto& [k, n] : out.category_tally)
                st.category_tally[k] += n;
            if (journal.is_open()) {
                for (const auto& rec : out.records)
                    journal << detail::record_to_journal(unit, rec) << "\n";
            }
            for (auto& rec : out.records) records.push_back(std::move(rec));
            st.last_unit = unit;
            ++consumed;
            ++since_checkpoint;
            if (!cfg.checkpoint_path.empty() &&
                since_checkpoint >= cfg.checkpoint_interval) {
                journal.flush();
                detail::write_checkpoint(cfg, st);
                since_checkpoint = 0;
            }
            if (cfg.stop_after_units > 0 && consumed >= cfg.stop_after_units &&
                unit < last_unit) {
                stop.store(true);
                result.completed = false;
                break;
            }
        }
        {
            std::lock_guard<std::mutex> lock(mu);
            stop.store(true);
            cv.notify_all();
        }
        for (auto& t : threads) t.join();
    }

    if (!cfg.checkpoint_path.empty()) {
        journal.flush();
        detail::write_checkpoint(cfg, st);
    }

    std::sort(records.begin(), records.end(),
              [](const SearchRecord& x, const SearchRecord& y) {
                  return x.edges < y.edges;
              });

    if (result.completed && !cfg.out_path.empty()) {
        std::string tmp = cfg.out_path + ".tmp";
        {
            std::ofstream os(tmp, std::ios::trunc | std::ios::binary);
            if (!os) throw std::runtime_error("cannot write " + tmp);
            for (const auto& rec : records) os << record_to_json(rec) << "\n";
            os.flush();
            if (!os) throw std::runtime_error("write failed for " + tmp);
        }
        if (std::rename(tmp.c_str(), cfg.out_path.c_str()) != 0)
            throw std::runtime_error("cannot replace " + cfg.out_path);
    }

    result.class_tally = std::move(st.class_tally);
    result.category_tally = std::move(st.category_tally);
    result.combos = st.combos;
    result.records = std::move(records);
    result.last_unit = st.last_unit;
    return result;
}

}  // namespace pipedlab
