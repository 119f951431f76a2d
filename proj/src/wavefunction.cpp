#include "mdgas/wavefunction.hpp"

#include <algorithm>
#include <cmath>

#include "mdgas/error.hpp"

namespace mdgas {

namespace {

void check_momenta(std::span<const double> k) {
  if (k.empty()) throw InvalidArgument("need at least one particle");
  if (k.size() > kMaxWavefunctionParticles)
    throw InvalidArgument("permutation enumeration is limited to N <= 8");
  for (std::size_t a = 0; a < k.size(); ++a)
    for (std::size_t b = a + 1; b < k.size(); ++b)
      if (k[a] == k[b]) throw DegenerateInput("repeated momenta: determinant vanishes");
}

}  // namespace

std::map<Permutation, cplx> gaudin_amplitudes(std::span<const double> momenta,
                                              double lambda) {
  check_momenta(momenta);
  const std::size_t n = momenta.size();
  std::map<Permutation, cplx> out;
  for (const auto& p : all_permutations(n)) {
    cplx a = static_cast<double>(p.sign());
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < j; ++l)
        a *= cplx{1.0, lambda * (momenta[p(j)] - momenta[p(l)])};
    out.emplace(p, a);
  }
  return out;
}

BetheWavefunction::BetheWavefunction(std::vector<double> momenta,
                                     const std::map<Permutation, cplx>& amplitudes,
                                     Statistics statistics)
    : momenta_(std::move(momenta)), statistics_(statistics) {
  check_momenta(momenta_);
  perms_ = all_permutations(momenta_.size());
  amplitudes_.reserve(perms_.size());
  for (const auto& p : perms_) {
    const auto it = amplitudes.find(p);
    amplitudes_.push_back(it == amplitudes.end() ? cplx{} : it->second);
  }
}

BetheWavefunction BetheWavefunction::gaudin_fermion(std::vector<double> momenta,
                                                    double lambda) {
  auto amps = gaudin_amplitudes(momenta, lambda);
  return BetheWavefunction(std::move(momenta), amps, Statistics::fermion);
}

BetheWavefunction BetheWavefunction::free_boson(std::vector<double> momenta) {
  check_momenta(momenta);
  std::map<Permutation, cplx> amps;
  for (const auto& p : all_permutations(momenta.size())) amps.emplace(p, 1.0);
  return BetheWavefunction(std::move(momenta), amps, Statistics::boson);
}

double BetheWavefunction::energy() const {
  double e = 0.0;
  for (double k : momenta_) e += k * k;
  return e;
}

cplx BetheWavefunction::amplitude(const Permutation& p) const {
  return amplitudes_.at(p.lex_rank());
}

cplx BetheWavefunction::value(std::span<const double> x) const {
  if (x.size() != particles()) throw InvalidArgument("dimension mismatch");
  return value_in_sector(x, Permutation::sorting(x));
}

std::vector<cplx> BetheWavefunction::gradient(std::span<const double> x) const {
  if (x.size() != particles()) throw InvalidArgument("dimension mismatch");
  return gradient_in_sector(x, Permutation::sorting(x));
}

cplx BetheWavefunction::value_in_sector(std::span<const double> x,
                                        const Permutation& sector) const {
  const std::size_t n = particles();
  cplx sum{};
  for (std::size_t r = 0; r < perms_.size(); ++r) {
    double phase = 0.0;
    for (std::size_t j = 0; j < n; ++j) phase += momenta_[perms_[r](j)] * x[sector(j)];
    sum += amplitudes_[r] * std::polar(1.0, phase);
  }
  if (statistics_ == Statistics::fermion && sector.sign() < 0) sum = -sum;
  return sum;
}

std::vector<cplx> BetheWavefunction::gradient_in_sector(std::span<const double> x,
                                                        const Permutation& sector) const {
  const std::size_t n = particles();
  const Permutation slot = sector.inverse();  // slot(m): position of x_m in the ordering
  std::vector<cplx> g(n);
  for (std::size_t r = 0; r < perms_.size(); ++r) {
    double phase = 0.0;
    for (std::size_t j = 0; j < n; ++j) phase += momenta_[perms_[r](j)] * x[sector(j)];
    const cplx term = amplitudes_[r] * std::polar(1.0, phase) * cplx{0.0, 1.0};
    for (std::size_t m = 0; m < n; ++m) g[m] += term * momenta_[perms_[r](slot(m))];
  }
  if (statistics_ == Statistics::fermion && sector.sign() < 0)
    for (auto& v : g) v = -v;
  return g;
}

double BetheWavefunction::value_bound() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::abs(a);
  return s;
}

double BetheWavefunction::derivative_bound() const {
  double kmax = 0.0;
  for (double k : momenta_) kmax = std::max(kmax, std::abs(k));
  return 2.0 * kmax * value_bound();
}

}  // namespace mdgas
