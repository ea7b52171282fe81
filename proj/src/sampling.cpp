#include "prolong/sampling.hpp"

namespace prolong {

Rational random_rational(std::mt19937_64& rng, bool allow_zero) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  while (true) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (allow_zero || q != 0) return q;
  }
}

BaseElem random_elem(std::mt19937_64& rng, Field field) {
  if (field == Field::Q) return BaseElem(random_rational(rng));
  std::uniform_int_distribution<int> deg(0, 2);
  std::vector<Rational> coeffs;
  const int d = deg(rng);
  for (int k = 0; k <= d; ++k) coeffs.push_back(random_rational(rng));
  TPoly num(std::move(coeffs));
  std::uniform_int_distribution<int> third(0, 2);
  if (third(rng) == 0) return BaseElem(num, TPoly({random_rational(rng), Rational(1)}));
  return BaseElem(num);
}

Vector random_point(std::mt19937_64& rng, std::size_t n, Field field) {
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_elem(rng, field));
  return v;
}

}  // namespace prolong
