#include "genergy/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "genergy/error.hpp"
#include "genergy/graph.hpp"

namespace genergy {

std::string_view to_string(BoundName name) {
  switch (name) {
    case BoundName::km_first: return "KM_FIRST";
    case BoundName::km_absolute: return "KM_ABSOLUTE";
    case BoundName::thm1_upper: return "THM1_UPPER";
    case BoundName::thm2_absolute: return "THM2_ABSOLUTE";
    case BoundName::weak_upper: return "WEAK_UPPER";
    case BoundName::lowb_lower: return "LOWB_LOWER";
    case BoundName::sigma1_rayleigh: return "SIGMA1_RAYLEIGH";
  }
  return "UNKNOWN";
}

BoundSide side_of(BoundName name) {
  return (name == BoundName::lowb_lower || name == BoundName::sigma1_rayleigh) ? BoundSide::lower
                                                                                : BoundSide::upper;
}

const BoundReport* CertificationReport::find(BoundName name) const {
  auto it = std::find_if(reports.begin(), reports.end(),
                         [&](const BoundReport& r) { return r.name == name; });
  return it == reports.end() ? nullptr : &*it;
}

namespace {

BoundReport finish(BoundName name, std::vector<Diagnostic> diags, double value) {
  BoundReport r{name, true, std::nullopt, std::move(diags)};
  r.applicable = std::all_of(r.diagnostics.begin(), r.diagnostics.end(),
                             [](const Diagnostic& d) { return d.held; });
  if (r.applicable) r.value = value;
  return r;
}

Diagnostic nonnegative_check(const DenseMatrix& a) {
  const auto e = a.entries();
  const double smallest = *std::min_element(e.begin(), e.end());
  return {"nonnegative", smallest >= 0.0, {{"min_entry", smallest}}};
}

Diagnostic rows_le_cols_check(const DenseMatrix& a) {
  return {"rows<=cols",
          a.rows() <= a.cols(),
          {{"rows", static_cast<double>(a.rows())}, {"cols", static_cast<double>(a.cols())}}};
}

}  // namespace

double energy(const DenseMatrix& a) { return spectrum_of(a).sum(); }

double graph_energy(const Graph& g) { return singular_values_symmetric(adjacency(g)).sum(); }

BoundReport sigma1_rayleigh_lower(const DenseMatrix& a) {
  const double m = static_cast<double>(a.rows());
  const double n = static_cast<double>(a.cols());
  return finish(BoundName::sigma1_rayleigh, {nonnegative_check(a)}, entry_sum(a) / std::sqrt(m * n));
}

KmBounds km_upper(std::uint64_t n_vertices, std::uint64_t n_edges) {
  const double n = static_cast<double>(n_vertices);
  const double e = static_cast<double>(n_edges);
  const bool order_ok = n_vertices >= 1;
  const bool simple_ok = n_vertices >= 1 && n_edges <= n_vertices * (n_vertices - 1) / 2;

  std::vector<Diagnostic> first_diags{
      {"order>=1", order_ok, {{"n", n}}},
      {"edges<=n(n-1)/2", simple_ok, {{"e", e}, {"n", n}}},
      {"edges>=n/2", 2.0 * e >= n, {{"e", e}, {"n/2", n / 2.0}}},
  };
  double first = 0.0;
  if (order_ok) {
    const double avg = 2.0 * e / n;
    first = avg + std::sqrt(std::max(0.0, (n - 1.0) * (2.0 * e - avg * avg)));
  }

  std::vector<Diagnostic> abs_diags{
      {"order>=1", order_ok, {{"n", n}}},
      {"edges<=n(n-1)/2", simple_ok, {{"e", e}, {"n", n}}},
  };
  return {finish(BoundName::km_first, std::move(first_diags), first),
          finish(BoundName::km_absolute, std::move(abs_diags), (n / 2.0) * (1.0 + std::sqrt(n)))};
}

BoundReport thm1_upper(const DenseMatrix& a) {
  const double m = static_cast<double>(a.rows());
  const double n = static_cast<double>(a.cols());
  const double norm1 = entry_sum(a);
  const double alpha = max_entry(a);
  const double tr = gram_trace(a);

  std::vector<Diagnostic> diags{
      rows_le_cols_check(a),
      nonnegative_check(a),
      {"entry_sum>=cols*max_entry", norm1 >= n * alpha, {{"entry_sum", norm1}, {"cols*max_entry", n * alpha}}},
  };
  if (!std::all_of(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.held; })) {
    return finish(BoundName::thm1_upper, std::move(diags), 0.0);
  }

  double radicand = tr - norm1 * norm1 / (m * n);
  if (radicand < 0.0) {
    if (radicand < -radicand_slack * std::max(1.0, tr)) {
      throw InconsistencyError("negative radicand " + std::to_string(radicand) +
                               " in the entry-sum upper bound");
    }
    radicand = 0.0;
  }
  return finish(BoundName::thm1_upper, std::move(diags),
                norm1 / std::sqrt(m * n) + std::sqrt((m - 1.0) * radicand));
}

BoundReport thm2_upper(const DenseMatrix& a) {
  const double m = static_cast<double>(a.rows());
  const double n = static_cast<double>(a.cols());
  const double alpha = max_entry(a);
  const double norm1 = entry_sum(a);
  std::vector<Diagnostic> diags{rows_le_cols_check(a), nonnegative_check(a)};
  // Informational: which of the two proof branches covers this input. Always "held".
  const bool dense_branch = norm1 >= n * alpha;
  diags.push_back({dense_branch ? "branch:entry_sum>=cols*max_entry" : "branch:entry_sum<cols*max_entry",
                   true,
                   {{"entry_sum", norm1}, {"cols*max_entry", n * alpha}}});
  return finish(BoundName::thm2_absolute, std::move(diags),
                alpha * (m + std::sqrt(m)) * std::sqrt(n) / 2.0);
}

BoundReport weak_upper(const DenseMatrix& a) {
  const double k = static_cast<double>(std::min(a.rows(), a.cols()));
  return finish(BoundName::weak_upper, {}, std::sqrt(k * gram_trace(a)));
}

BoundReport lowb_lower(const SingularSpectrum& spectrum, double trace) {
  const double s1 = spectrum.sigma(0);
  const double s2 = spectrum.sigma(1);
  const double floor = sigma2_relative_floor * std::max(1.0, s1);
  std::vector<Diagnostic> diags{
      {"sigma2>floor", s2 > floor, {{"sigma1", s1}, {"sigma2", s2}, {"floor", floor}}}};
  const double value = diags.front().held ? s1 + (trace - s1 * s1) / s2 : 0.0;
  return finish(BoundName::lowb_lower, std::move(diags), value);
}

BoundReport lowb_lower(const DenseMatrix& a) { return lowb_lower(spectrum_of(a), gram_trace(a)); }

CertificationReport certify(const DenseMatrix& a, double tolerance) {
  const SingularSpectrum spectrum = spectrum_of(a);
  CertificationReport out;
  out.energy = spectrum.sum();
  out.tolerance = tolerance;

  if (is_adjacency_like(a)) {
    const auto edges = static_cast<std::uint64_t>(std::llround(entry_sum(a) / 2.0));
    auto km = km_upper(a.rows(), edges);
    out.reports.push_back(std::move(km.first));
    out.reports.push_back(std::move(km.absolute));
  } else {
    for (BoundName name : {BoundName::km_first, BoundName::km_absolute}) {
      out.reports.push_back({name, false, std::nullopt, {{"adjacency_matrix", false, {}}}});
    }
  }
  out.reports.push_back(thm1_upper(a));
  out.reports.push_back(thm2_upper(a));
  out.reports.push_back(weak_upper(a));
  out.reports.push_back(lowb_lower(spectrum, gram_trace(a)));
  out.reports.push_back(sigma1_rayleigh_lower(a));

  for (const auto& r : out.reports) {
    if (!r.applicable) continue;
    const double v = *r.value;
    const double excess = side_of(r.name) == BoundSide::upper ? out.energy - v : v - out.energy;
    if (excess > tolerance) out.violations.push_back({r.name, v, out.energy, excess});
  }
  return out;
}

}  // namespace genergy
