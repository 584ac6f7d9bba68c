#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "normcat/category.hpp"
#include "normcat/errors.hpp"
#include "normcat/extreal.hpp"
#include "normcat/report.hpp"

namespace normcat {

/// A sequence in a normed category: objects indexed by omega with bonding
/// arrows x_n -> x_m for n <= m. Backed by generator callbacks with
/// synchronized memoization, so lazily-built hosts stay cheap and a shared
/// sequence can be probed from several threads.
///
/// bond(n, m) with n > m is a contract violation (logic_error), not inf.
template <NormedCategory C>
class Sequence {
 public:
  using Obj = object_id_t<C>;
  using Arr = arrow_id_t<C>;

  Sequence(C host, std::function<Obj(int)> object_gen, std::function<Arr(int, int)> bond_gen)
      : host_(std::move(host)), state_(std::make_shared<State>()) {
    state_->object_gen = std::move(object_gen);
    state_->bond_gen = std::move(bond_gen);
    state_->serial = next_serial();
  }

  const C& host() const { return host_; }

  Obj object_at(int n) const {
    if (n < 0) throw std::logic_error("sequence index must be nonnegative");
    std::lock_guard<std::mutex> lock(state_->mtx);
    auto it = state_->objects.find(n);
    if (it != state_->objects.end()) return it->second;
    Obj o = state_->object_gen(n);
    state_->objects.emplace(n, o);
    return o;
  }

  Arr bond(int n, int m) const {
    if (n > m) throw std::logic_error("bond(n, m) requires n <= m");
    if (n == m) return host_.identity(object_at(n));
    {
      std::lock_guard<std::mutex> lock(state_->mtx);
      auto it = state_->bonds.find({n, m});
      if (it != state_->bonds.end()) return it->second;
    }
    Arr a = state_->bond_gen(n, m);
    std::lock_guard<std::mutex> lock(state_->mtx);
    state_->bonds.emplace(std::make_pair(n, m), a);
    return a;
  }

  bool same_state(const Sequence& o) const { return state_ == o.state_; }
  std::uint64_t serial() const { return state_->serial; }

 private:
  struct State {
    std::function<Obj(int)> object_gen;
    std::function<Arr(int, int)> bond_gen;
    std::map<int, Obj> objects;
    std::map<std::pair<int, int>, Arr> bonds;
    std::mutex mtx;
    std::uint64_t serial = 0;
  };
  static std::uint64_t next_serial() {
    static std::atomic<std::uint64_t> counter{0};
    return ++counter;
  }

  C host_;
  std::shared_ptr<State> state_;
};

/// Sequence whose bonds are derived from the single-step arrows by
/// composition; the common case for orbits and table fixtures.
template <NormedCategory C>
Sequence<C> sequence_from_steps(C host, std::function<object_id_t<C>(int)> object_gen,
                                std::function<arrow_id_t<C>(int)> step_gen) {
  auto hostc = host;
  auto bond = [hostc, step_gen](int n, int m) {
    auto a = step_gen(n);
    for (int k = n + 1; k < m; ++k) a = hostc.compose(step_gen(k), a);
    return a;
  };
  return Sequence<C>(std::move(host), std::move(object_gen), std::move(bond));
}

/// Verifies bond(n,n) = id and bond(m,k) . bond(n,m) = bond(n,k) on the
/// prefix. All triples when they fit in the budget, every eighth triple
/// otherwise. Returns a description of the first violation found.
template <NormedCategory C>
std::optional<std::string> check_functoriality(const Sequence<C>& s, int horizon,
                                               std::uint64_t budget = 200000) {
  const C& host = s.host();
  for (int n = 0; n <= horizon; ++n) {
    auto b = s.bond(n, n);
    if (!(b == host.identity(s.object_at(n))))
      return "bond(" + std::to_string(n) + "," + std::to_string(n) + ") is not the identity";
    if (!(host.dom(s.bond(n, horizon)) == s.object_at(n)))
      return "bond endpoints wrong at n=" + std::to_string(n);
  }
  std::uint64_t total = 0;
  for (int n = 0; n <= horizon; ++n)
    for (int m = n; m <= horizon; ++m)
      for (int k = m; k <= horizon; ++k) ++total;
  const std::uint64_t stride = total <= budget ? 1 : 8;
  std::uint64_t i = 0;
  for (int n = 0; n <= horizon; ++n)
    for (int m = n; m <= horizon; ++m)
      for (int k = m; k <= horizon; ++k) {
        if (i++ % stride) continue;
        if (!(host.compose(s.bond(m, k), s.bond(n, m)) == s.bond(n, k)))
          return "bond(" + std::to_string(m) + "," + std::to_string(k) + ") . bond(" +
                 std::to_string(n) + "," + std::to_string(m) + ") != bond(" + std::to_string(n) +
                 "," + std::to_string(k) + ")";
      }
  return std::nullopt;
}

/// Explicit witness of the Cauchy quantifier: rows (eps, N) claim
/// mu(bond(m, n)) < eps whenever N < m <= n. Sorted by decreasing eps with
/// nondecreasing thresholds.
struct CauchyCertificate {
  std::vector<std::pair<double, int>> rows;

  explicit CauchyCertificate(std::vector<std::pair<double, int>> r) : rows(std::move(r)) {
    if (rows.empty()) throw InputError("certificate needs at least one row");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!(rows[i].first > 0.0) || !std::isfinite(rows[i].first))
        throw InputError("certificate eps must be finite and positive");
      if (rows[i].second < 0) throw InputError("certificate threshold must be nonnegative");
      if (i > 0 && (rows[i].first >= rows[i - 1].first || rows[i].second < rows[i - 1].second))
        throw InputError("certificate rows must have decreasing eps and nondecreasing thresholds");
    }
  }

  int max_threshold() const {
    int m = 0;
    for (const auto& [eps, n] : rows) m = std::max(m, n);
    return m;
  }
};

struct CauchyWitness {
  double eps;
  int m, n;
  ExtReal mu;
};

struct CauchyVerdict {
  enum class Status { ConfirmedUpToHorizon, Refuted } status;
  std::optional<CauchyWitness> witness;

  bool confirmed() const { return status == Status::ConfirmedUpToHorizon; }
};

/// Checks every certificate row against every bond within the horizon.
/// Refutation is conclusive; confirmation is only as strong as the horizon.
/// A functoriality violation discovered on the way is an input error, not
/// a refutation.
template <NormedCategory C>
CauchyVerdict check_cauchy(const Sequence<C>& seq, const CauchyCertificate& cert, int horizon) {
  if (horizon < cert.max_threshold())
    throw InputError("horizon " + std::to_string(horizon) + " is below the largest threshold " +
                     std::to_string(cert.max_threshold()));
  if (auto bad = check_functoriality(seq, horizon))
    throw InputError("sequence is not functorial: " + *bad);
  for (const auto& [eps, N] : cert.rows)
    for (int m = N + 1; m <= horizon; ++m)
      for (int n = m; n <= horizon; ++n) {
        ExtReal mu = seq.host().norm(seq.bond(m, n));
        if (!(mu.raw() < eps))
          return {CauchyVerdict::Status::Refuted, CauchyWitness{eps, m, n, mu}};
      }
  return {CauchyVerdict::Status::ConfirmedUpToHorizon, std::nullopt};
}

inline std::vector<double> default_eps_ladder(int count = 40) {
  std::vector<double> out;
  double eps = 1.0;
  for (int i = 0; i < count; ++i, eps *= 0.5) out.push_back(eps);
  return out;
}

/// User-supplied geometric tail claim: mu(step n+1) <= ratio * mu(step n)
/// for every n >= from_index. Verified against the observed steps before
/// any certificate is emitted from it.
struct GeometricTailBound {
  double ratio;
  int from_index = 0;
};

struct SeriesReport {
  std::vector<ExtReal> partial_sums;  // partial_sums[k] = sum of the first k step norms
  enum class Status { Certified, NoVerdict } status = Status::NoVerdict;
  std::optional<CauchyCertificate> certificate;
  std::string note;
};

/// Partial sums of the step norms, plus a certificate when they can be
/// dominated: either every observed step is zero, or the caller supplies a
/// geometric tail bound that the observations do not refute. Divergent or
/// undominated sums yield NoVerdict; the series test is sufficient, never
/// refuting.
template <NormedCategory C>
SeriesReport series_criterion(const Sequence<C>& seq, int horizon,
                              std::optional<GeometricTailBound> tail = std::nullopt,
                              const std::vector<double>& eps_ladder = default_eps_ladder()) {
  SeriesReport rep;
  std::vector<ExtReal> steps;
  ExtReal sum = ExtReal::zero();
  rep.partial_sums.push_back(sum);
  for (int n = 0; n < horizon; ++n) {
    steps.push_back(seq.host().norm(seq.bond(n, n + 1)));
    sum += steps.back();
    rep.partial_sums.push_back(sum);
  }

  bool all_zero = true;
  for (const auto& s : steps) all_zero = all_zero && s == ExtReal::zero();

  std::vector<std::pair<double, int>> rows;
  if (all_zero) {
    for (double eps : eps_ladder) rows.push_back({eps, 0});
    rep.note = "all observed steps are zero";
  } else if (tail) {
    if (!(tail->ratio >= 0.0) || tail->ratio >= 1.0)
      throw InputError("geometric tail ratio must lie in [0, 1)");
    if (tail->from_index < 0 || tail->from_index >= horizon)
      throw InputError("geometric tail start index outside the observed prefix");
    ExtReal head = steps[static_cast<std::size_t>(tail->from_index)];
    if (head.is_inf()) {
      rep.note = "step norm at the tail start is infinite";
      return rep;
    }
    for (int n = tail->from_index; n + 1 < horizon; ++n) {
      if (steps[static_cast<std::size_t>(n + 1)].raw() >
          tail->ratio * steps[static_cast<std::size_t>(n)].raw()) {
        rep.note = "observed steps refute the claimed tail at n=" + std::to_string(n + 1);
        return rep;
      }
    }
    // mu(bond(m, n)) <= sum of steps m..n-1 <= head * q^(m-n0) / (1-q)
    auto bound = [&](int m) {
      return head.raw() * std::pow(tail->ratio, m - tail->from_index) / (1.0 - tail->ratio);
    };
    for (double eps : eps_ladder) {
      int N = tail->from_index;
      while (N <= horizon && !(bound(N + 1) < eps)) ++N;
      if (N > horizon) continue;  // not certifiable inside the horizon
      rows.push_back({eps, N});
    }
    if (rows.empty()) {
      rep.note = "tail bound too weak to certify any ladder eps within the horizon";
      return rep;
    }
  } else {
    rep.note = "no tail bound supplied; partial sums only";
    return rep;
  }

  rep.certificate = CauchyCertificate(std::move(rows));
  rep.status = SeriesReport::Status::Certified;
  return rep;
}

// ---------------------------------------------------------------------------
// Convergence: colimit candidates and the convergent => Cauchy transfer
// ---------------------------------------------------------------------------

struct ColimitVerdicts {
  Verdict cocone = Verdict::Skipped;
  std::string cocone_witness;
  Verdict universal = Verdict::Skipped;
  std::string universal_witness;
  Verdict c2 = Verdict::Skipped;
  std::string c2_witness;

  bool passed() const {
    return cocone != Verdict::Fail && universal != Verdict::Fail && c2 != Verdict::Fail;
  }
};

/// Horizon-bounded check that (v, g_n) is a limit: the cocone squares
/// commute, the cocone is universal among prefix cocones (enumerated only
/// on finite hosts, SKIPPED otherwise), and the cocone norms vanish --
/// operationalized as mu(g_n) < tol and a nonincreasing trend over the
/// last quartile of the horizon.
template <NormedCategory C>
ColimitVerdicts verify_colimit_candidate(const Sequence<C>& seq, const object_id_t<C>& v,
                                         const std::function<arrow_id_t<C>(int)>& cocone,
                                         int horizon, double tol) {
  using Arr = arrow_id_t<C>;
  const C& host = seq.host();
  ColimitVerdicts out;

  std::vector<Arr> g;
  for (int n = 0; n <= horizon; ++n) {
    g.push_back(cocone(n));
    if (!(host.dom(g.back()) == seq.object_at(n)) || !(host.cod(g.back()) == v))
      throw InputError("cocone arrow at n=" + std::to_string(n) + " has wrong endpoints");
  }

  out.cocone = Verdict::Pass;
  for (int n = 0; n <= horizon && out.cocone == Verdict::Pass; ++n)
    for (int m = n; m <= horizon; ++m) {
      if (!(host.compose(g[static_cast<std::size_t>(m)], seq.bond(n, m)) ==
            g[static_cast<std::size_t>(n)])) {
        out.cocone = Verdict::Fail;
        out.cocone_witness =
            "g_" + std::to_string(m) + " . bond(" + std::to_string(n) + "," + std::to_string(m) +
            ") != g_" + std::to_string(n);
        break;
      }
    }

  if constexpr (EnumerableNormedCategory<C>) {
    out.universal = Verdict::Pass;
    auto xh = seq.object_at(horizon);
    for (const auto& vp : host.objects()) {
      for (const auto& t : host.arrows(xh, vp)) {
        // the prefix cocone induced by t
        int matching = 0;
        std::string first_match;
        for (const auto& h : host.arrows(v, vp)) {
          bool ok = true;
          for (int n = 0; n <= horizon && ok; ++n)
            ok = host.compose(h, g[static_cast<std::size_t>(n)]) ==
                 host.compose(t, seq.bond(n, horizon));
          if (ok) {
            ++matching;
            if (matching == 1) first_match = host.describe_arrow(h);
          }
        }
        if (matching != 1) {
          out.universal = Verdict::Fail;
          out.universal_witness = "candidate cocone through " + host.describe_object(vp) +
                                  " via " + host.describe_arrow(t) + " has " +
                                  std::to_string(matching) + " mediating arrows";
          break;
        }
      }
      if (out.universal == Verdict::Fail) break;
    }
  } else {
    out.universal = Verdict::Skipped;
    out.universal_witness = "host objects not enumerable";
  }

  out.c2 = Verdict::Pass;
  int lo = horizon - horizon / 4;
  for (int n = lo; n <= horizon; ++n) {
    ExtReal mu = host.norm(g[static_cast<std::size_t>(n)]);
    if (!(mu.raw() < tol)) {
      out.c2 = Verdict::Fail;
      out.c2_witness = "mu(g_" + std::to_string(n) + ") = " + mu.str();
      break;
    }
    if (n > lo) {
      ExtReal prev = host.norm(g[static_cast<std::size_t>(n - 1)]);
      if (mu.raw() > prev.raw() + tol) {
        out.c2 = Verdict::Fail;
        out.c2_witness = "mu(g_n) increases at n=" + std::to_string(n);
        break;
      }
    }
  }
  return out;
}

struct ConvergenceTransfer {
  CauchyCertificate certificate;
  CauchyVerdict crosscheck;
  bool lemma_inequality_ok = true;
  std::string lemma_witness;
};

/// From a verified limit, derive a Cauchy certificate: N(eps) is the least
/// index from which every observed cocone norm stays below eps/2 (the
/// triangle through the limit gives mu(bond(n,m)) <= mu(g_n) + mu(g_m)).
/// The certificate is then cross-checked against the bonds themselves; a
/// cross-check failure flags a norm/bond inconsistency in the host.
template <NormedCategory C>
ConvergenceTransfer convergent_implies_cauchy_check(
    const Sequence<C>& seq, const object_id_t<C>& v,
    const std::function<arrow_id_t<C>(int)>& cocone, int horizon, double tol = 1e-9,
    const std::vector<double>& eps_ladder = default_eps_ladder()) {
  const C& host = seq.host();
  auto verdicts = verify_colimit_candidate(seq, v, cocone, horizon, tol);
  if (verdicts.cocone != Verdict::Pass || verdicts.c2 != Verdict::Pass)
    throw InputError("limit clauses do not hold: cocone=" + std::string(to_string(verdicts.cocone)) +
                     ", c2=" + std::string(to_string(verdicts.c2)));

  std::vector<ExtReal> mu_g;
  for (int n = 0; n <= horizon; ++n) mu_g.push_back(host.norm(cocone(n)));

  std::vector<std::pair<double, int>> rows;
  for (double eps : eps_ladder) {
    int N = horizon + 1;
    for (int n0 = 0; n0 <= horizon; ++n0) {
      bool ok = true;
      for (int n = n0; n <= horizon && ok; ++n) ok = mu_g[static_cast<std::size_t>(n)].raw() < eps / 2.0;
      if (ok) {
        N = n0;
        break;
      }
    }
    if (N <= horizon) rows.push_back({eps, N});
  }
  if (rows.empty()) throw InputError("cocone norms never fall below eps/2 for any ladder eps");

  CauchyCertificate cert(std::move(rows));
  ConvergenceTransfer out{cert, check_cauchy(seq, cert, horizon), true, ""};
  for (int n = 0; n <= horizon && out.lemma_inequality_ok; ++n)
    for (int m = n; m <= horizon; ++m) {
      ExtReal lhs = host.norm(seq.bond(n, m));
      if (!leq_with_tol(lhs, mu_g[static_cast<std::size_t>(n)] + mu_g[static_cast<std::size_t>(m)],
                        1e-9)) {
        out.lemma_inequality_ok = false;
        out.lemma_witness = "mu(bond(" + std::to_string(n) + "," + std::to_string(m) +
                            ")) = " + lhs.str() + " exceeds mu(g_n)+mu(g_m)";
        break;
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Transformations and their norms
// ---------------------------------------------------------------------------

/// Natural transformation between sequences up to a strictly increasing
/// reindexing: components f_n : x_n -> y_phi(n) with the naturality squares
/// commuting on the checked prefix.
template <NormedCategory C>
struct Transformation {
  Sequence<C> from, to;
  std::function<int(int)> reindex;
  std::function<arrow_id_t<C>(int)> component;
};

template <NormedCategory C>
std::optional<std::string> check_naturality(const Transformation<C>& t, int horizon) {
  const C& host = t.from.host();
  int prev = -1;
  for (int n = 0; n <= horizon; ++n) {
    int p = t.reindex(n);
    if (p <= prev) return "reindexing is not strictly increasing at n=" + std::to_string(n);
    prev = p;
    auto f = t.component(n);
    if (!(host.dom(f) == t.from.object_at(n)) || !(host.cod(f) == t.to.object_at(p)))
      return "component endpoints wrong at n=" + std::to_string(n);
  }
  for (int m = 0; m <= horizon; ++m)
    for (int n = m + 1; n <= horizon; ++n) {
      auto lhs = host.compose(t.to.bond(t.reindex(m), t.reindex(n)), t.component(m));
      auto rhs = host.compose(t.component(n), t.from.bond(m, n));
      if (!(lhs == rhs))
        return "naturality square fails at (" + std::to_string(m) + "," + std::to_string(n) + ")";
    }
  return std::nullopt;
}

struct TransformationNormEstimate {
  ExtReal value;        // mu at the largest checked index
  ExtReal window_min, window_max;
  double one_sided_slack;  // certified excess of window values over the final one
};

/// Estimates the limit of the component norms: the last measured value,
/// bracketed by the min/max over the final window. The triangle through
/// the latest index guarantees one side: any earlier component exceeds the
/// final one by at most the two bond norms connecting them, and that slack
/// is reported. Both sequences must carry confirmed certificates.
template <NormedCategory C>
TransformationNormEstimate transformation_norm(const Transformation<C>& t,
                                               const CauchyCertificate& from_cert,
                                               const CauchyCertificate& to_cert, int horizon,
                                               int window = 0) {
  const C& host = t.from.host();
  if (auto bad = check_naturality(t, horizon)) throw InputError(*bad);
  if (!check_cauchy(t.from, from_cert, horizon).confirmed())
    throw InputError("source sequence certificate refuted");
  if (!check_cauchy(t.to, to_cert, std::max(t.reindex(horizon), to_cert.max_threshold())).confirmed())
    throw InputError("target sequence certificate refuted");

  if (window <= 0) window = std::max(1, horizon / 4);
  int lo = std::max(0, horizon - window);

  TransformationNormEstimate out{host.norm(t.component(horizon)), ExtReal::infinity(),
                                 ExtReal::zero(), 0.0};
  for (int n = lo; n <= horizon; ++n) {
    ExtReal mu = host.norm(t.component(n));
    out.window_min = min(out.window_min, mu);
    out.window_max = max(out.window_max, mu);
  }
  for (int n = lo; n < horizon; ++n) {
    ExtReal slack = host.norm(t.from.bond(n, horizon)) +
                    host.norm(t.to.bond(t.reindex(n), t.reindex(horizon)));
    out.one_sided_slack = std::max(out.one_sided_slack, slack.raw());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Diagonalization
// ---------------------------------------------------------------------------

/// Grid of row sequences linked by natural column arrows with identity
/// reindexing (pre-refined): column(k, m) : x_{k,m} -> x_{k+1,m}.
template <NormedCategory C>
struct SequenceGrid {
  std::vector<Sequence<C>> rows;
  std::vector<CauchyCertificate> row_certs;
  std::function<arrow_id_t<C>(int, int)> column;
};

template <NormedCategory C>
struct DiagonalizeResult {
  std::optional<Sequence<C>> diagonal;
  std::vector<int> refinement;  // chosen in-row index per diagonal stage
  SeriesReport series;

  bool certified() const { return series.status == SeriesReport::Status::Certified; }
};

/// Builds the diagonal of a grid of Cauchy rows, skipping ahead within each
/// row by its own modulus so the k-th diagonal step inherits a 2^-k row
/// contribution, then tries to certify the diagonal by the series test
/// (fitting a geometric tail to the observed steps). Rows that fail their
/// own certificate are input errors; an unfittable tail is a NoVerdict with
/// the partial sums as progress report.
template <NormedCategory C>
DiagonalizeResult<C> diagonalize(const SequenceGrid<C>& grid, int horizon) {
  using Arr = arrow_id_t<C>;
  if (grid.rows.size() != grid.row_certs.size())
    throw InputError("each grid row needs a certificate");
  if (static_cast<int>(grid.rows.size()) < horizon + 1)
    throw InputError("grid has fewer rows than the requested horizon");

  DiagonalizeResult<C> out;
  const C& host = grid.rows.front().host();

  int row_horizon = horizon;
  for (int k = 0; k <= horizon; ++k)
    row_horizon = std::max(row_horizon, grid.row_certs[static_cast<std::size_t>(k)].max_threshold());
  for (int k = 0; k <= horizon; ++k)
    if (!check_cauchy(grid.rows[static_cast<std::size_t>(k)],
                      grid.row_certs[static_cast<std::size_t>(k)], row_horizon)
             .confirmed())
      throw InputError("grid row " + std::to_string(k) + " fails its own Cauchy certificate");

  // column naturality on a prefix
  for (int k = 0; k < horizon; ++k)
    for (int m = 0; m < horizon; ++m) {
      auto lhs = host.compose(grid.column(k, m + 1), grid.rows[static_cast<std::size_t>(k)].bond(m, m + 1));
      auto rhs = host.compose(grid.rows[static_cast<std::size_t>(k + 1)].bond(m, m + 1),
                              grid.column(k, m));
      if (!(lhs == rhs))
        throw InputError("column transformation not natural at row " + std::to_string(k) +
                         ", index " + std::to_string(m));
    }

  // refinement: j_k >= j_{k-1}+1, past row k's threshold for eps = 2^-k
  std::vector<int> j(static_cast<std::size_t>(horizon) + 1);
  for (int k = 0; k <= horizon; ++k) {
    double eps = std::pow(0.5, k);
    int thr = 0;
    for (const auto& [e, N] : grid.row_certs[static_cast<std::size_t>(k)].rows)
      if (e <= eps) {
        thr = N;
        break;
      } else {
        thr = std::max(thr, N);  // best available threshold if no row is small enough
      }
    j[static_cast<std::size_t>(k)] = std::max({k == 0 ? 0 : j[static_cast<std::size_t>(k - 1)] + 1,
                                               thr + 1, k});
  }
  out.refinement = j;

  auto rows = grid.rows;
  auto column = grid.column;
  auto object_gen = [rows, j](int k) {
    return rows[static_cast<std::size_t>(k)].object_at(j[static_cast<std::size_t>(k)]);
  };
  auto step_gen = [rows, column, j, host](int k) -> Arr {
    // along row k from j_k to j_{k+1}, then down the column at j_{k+1}
    auto along = rows[static_cast<std::size_t>(k)].bond(j[static_cast<std::size_t>(k)],
                                                        j[static_cast<std::size_t>(k + 1)]);
    return host.compose(column(k, j[static_cast<std::size_t>(k + 1)]), along);
  };
  out.diagonal = sequence_from_steps<C>(host, object_gen, step_gen);

  // try to certify: fit a geometric tail to the observed diagonal steps
  std::vector<ExtReal> steps;
  for (int k = 0; k < horizon; ++k) steps.push_back(host.norm(out.diagonal->bond(k, k + 1)));
  bool all_zero = true;
  for (const auto& s : steps) all_zero = all_zero && s == ExtReal::zero();
  std::optional<GeometricTailBound> tail;
  if (!all_zero) {
    for (int n0 = 0; n0 + 1 < horizon && !tail; ++n0) {
      double q = 0.0;
      bool ok = true;
      for (int k = n0; k + 1 < horizon && ok; ++k) {
        double a = steps[static_cast<std::size_t>(k)].raw();
        double b = steps[static_cast<std::size_t>(k + 1)].raw();
        if (!std::isfinite(a) || !std::isfinite(b)) ok = false;
        else if (b == 0.0) continue;
        else if (a == 0.0) ok = false;
        else q = std::max(q, b / a);
      }
      // pad a hair against b/a rounding below the true ratio
      q *= 1.0 + 1e-12;
      if (ok && q < 1.0) tail = GeometricTailBound{q, n0};
    }
  }
  out.series = series_criterion(*out.diagonal, horizon, tail);
  return out;
}

// ---------------------------------------------------------------------------
// Fixture hosts for convergence pathologies
// ---------------------------------------------------------------------------

/// omega as a poset category where arrows out of even stages are free and
/// arrows out of odd stages cost inf. The natural sequence through it is
/// not Cauchy although its even-indexed subsequence is.
class ParityChainCategory {
 public:
  using object_id = long;
  using arrow_id = std::pair<long, long>;

  std::vector<arrow_id> arrows(object_id x, object_id y) const {
    if (x <= y) return {{x, y}};
    return {};
  }
  bool arrows_exhaustive(object_id, object_id) const { return true; }
  object_id dom(const arrow_id& f) const { return f.first; }
  object_id cod(const arrow_id& f) const { return f.second; }
  arrow_id identity(object_id x) const { return {x, x}; }
  bool composable(const arrow_id& f, const arrow_id& g) const { return f.first == g.second; }
  arrow_id compose(const arrow_id& f, const arrow_id& g) const {
    if (!composable(f, g)) throw std::logic_error("non-composable chain arrows");
    return {g.first, f.second};
  }
  ExtReal norm(const arrow_id& f) const {
    if (f.first == f.second || f.first % 2 == 0) return ExtReal::zero();
    return ExtReal::infinity();
  }
  std::string describe_object(object_id x) const { return std::to_string(x); }
  std::string describe_arrow(const arrow_id& f) const {
    return std::to_string(f.first) + "<=" + std::to_string(f.second);
  }
};

/// omega together with two mutually isomorphic top objects an infinite
/// norm apart. Every chain sequence converges to both tops, which are
/// isomorphic but not 0-isomorphic: convergence does not pin the limit
/// down to 0-isomorphism.
class TwinLimitChain {
 public:
  using object_id = long;
  using arrow_id = std::pair<long, long>;

  static constexpr object_id top0 = -1;
  static constexpr object_id top1 = -2;
  static bool is_top(object_id x) { return x < 0; }

  bool leq(object_id a, object_id b) const {
    if (a == b) return true;
    if (is_top(a)) return is_top(b);
    return !is_top(b) ? a <= b : true;
  }
  std::vector<arrow_id> arrows(object_id x, object_id y) const {
    if (leq(x, y)) return {{x, y}};
    return {};
  }
  bool arrows_exhaustive(object_id, object_id) const { return true; }
  object_id dom(const arrow_id& f) const { return f.first; }
  object_id cod(const arrow_id& f) const { return f.second; }
  arrow_id identity(object_id x) const { return {x, x}; }
  bool composable(const arrow_id& f, const arrow_id& g) const { return f.first == g.second; }
  arrow_id compose(const arrow_id& f, const arrow_id& g) const {
    if (!composable(f, g)) throw std::logic_error("non-composable chain arrows");
    return {g.first, f.second};
  }
  ExtReal norm(const arrow_id& f) const {
    if (f.first == f.second) return ExtReal::zero();
    if (is_top(f.first)) return ExtReal::infinity();  // between the two tops
    return ExtReal::zero();
  }
  std::string describe_object(object_id x) const {
    if (x == top0) return "L0";
    if (x == top1) return "L1";
    return std::to_string(x);
  }
  std::string describe_arrow(const arrow_id& f) const {
    return describe_object(f.first) + "<=" + describe_object(f.second);
  }
};

/// One object, one arrow per nonnegative real, composing additively and
/// normed by itself. The simplest host with prescribed bond norms.
class AdditiveRealCategory {
 public:
  using object_id = int;
  using arrow_id = double;

  object_id dom(arrow_id) const { return 0; }
  object_id cod(arrow_id) const { return 0; }
  arrow_id identity(object_id) const { return 0.0; }
  bool composable(arrow_id, arrow_id) const { return true; }
  arrow_id compose(arrow_id f, arrow_id g) const { return f + g; }
  ExtReal norm(arrow_id f) const { return ExtReal(f); }
  std::string describe_object(object_id) const { return "*"; }
  std::string describe_arrow(arrow_id f) const { return ExtReal(f).str(); }
};

// ---------------------------------------------------------------------------
// The completion as a category of certified sequences
// ---------------------------------------------------------------------------

template <NormedCategory C>
struct CertifiedSequence {
  Sequence<C> seq;
  CauchyCertificate cert;

  friend bool operator==(const CertifiedSequence& a, const CertifiedSequence& b) {
    return a.seq.same_state(b.seq);
  }
};

/// View of Seq(K): objects are certified Cauchy sequences, arrows are
/// reindexing transformations, the norm is the horizon-bounded estimate of
/// the limit of component norms. Object and arrow equality is
/// representational (same underlying state), not semantic; deciding
/// transformation equality is out of scope.
template <NormedCategory C>
class SeqCompletionView {
 public:
  struct arrow_id {
    CertifiedSequence<C> from, to;
    std::shared_ptr<const Transformation<C>> t;
    std::uint64_t serial;

    friend bool operator==(const arrow_id& a, const arrow_id& b) { return a.serial == b.serial; }
  };
  using object_id = CertifiedSequence<C>;

  explicit SeqCompletionView(int horizon) : horizon_(horizon) {}

  arrow_id lift(CertifiedSequence<C> from, CertifiedSequence<C> to, Transformation<C> t) const {
    return {std::move(from), std::move(to),
            std::make_shared<const Transformation<C>>(std::move(t)), next_serial()};
  }

  object_id dom(const arrow_id& f) const { return f.from; }
  object_id cod(const arrow_id& f) const { return f.to; }
  arrow_id identity(const object_id& x) const {
    auto seq = x.seq;
    Transformation<C> t{seq, seq, [](int n) { return n; },
                        [seq](int n) { return seq.host().identity(seq.object_at(n)); }};
    return {x, x, std::make_shared<const Transformation<C>>(std::move(t)), next_serial()};
  }
  bool composable(const arrow_id& f, const arrow_id& g) const { return f.from == g.to; }
  arrow_id compose(const arrow_id& f, const arrow_id& g) const {
    if (!composable(f, g)) throw std::logic_error("non-composable transformations");
    auto ft = f.t, gt = g.t;
    auto host = f.from.seq.host();
    Transformation<C> t{g.t->from, f.t->to,
                        [ft, gt](int n) { return ft->reindex(gt->reindex(n)); },
                        [ft, gt, host](int n) {
                          return host.compose(ft->component(gt->reindex(n)), gt->component(n));
                        }};
    return {g.from, f.to, std::make_shared<const Transformation<C>>(std::move(t)), next_serial()};
  }
  ExtReal norm(const arrow_id& f) const {
    return transformation_norm(*f.t, f.from.cert, f.to.cert, horizon_).value;
  }
  std::string describe_object(const object_id& x) const {
    return "seq#" + std::to_string(x.seq.serial());
  }
  std::string describe_arrow(const arrow_id& f) const {
    return "transf#" + std::to_string(f.serial) + "(" + describe_object(f.from) + "->" +
           describe_object(f.to) + ")";
  }

  int horizon() const { return horizon_; }

 private:
  static std::uint64_t next_serial() {
    static std::atomic<std::uint64_t> counter{0};
    return ++counter;
  }
  int horizon_;
};

/// Constant sequence at an object: the embedding of the host into its
/// completion. Bond norms are all zero, so any ladder certificate holds.
template <NormedCategory C>
CertifiedSequence<C> constant_sequence(const C& host, const object_id_t<C>& x) {
  auto obj = [x](int) { return x; };
  C hostc = host;
  auto bond = [hostc, x](int, int) { return hostc.identity(x); };
  return {Sequence<C>(host, obj, bond), CauchyCertificate({{1.0, 0}, {0.5, 0}, {0.25, 0}})};
}

}  // namespace normcat
