#include "dbs/sampling.hpp"

namespace dbs {

long Sampler::integer(long lo, long hi) {
  if (hi < lo) throw InvalidInput("empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::rational() {
  Rational q(integer(-9, 9), integer(1, 5));
  q.canonicalize();
  return q;
}

Rational Sampler::nonzero_rational() {
  long num = integer(1, 18);
  if (num > 9) num = 9 - num;  // maps 10..18 onto -1..-9
  Rational q(num, integer(1, 5));
  q.canonicalize();
  return q;
}

std::vector<Rational> Sampler::rationals(int n, bool nonzero) {
  std::vector<Rational> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(nonzero ? nonzero_rational() : rational());
  return out;
}

}  // namespace dbs
