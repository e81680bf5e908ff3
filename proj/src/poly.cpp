#include "kingdom/poly.hpp"

#include <stdexcept>

#include "json.hpp"

#include "kingdom/errors.hpp"

namespace kingdom {

DominationPolynomial::DominationPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  for (const auto& c : coeffs_)
    if (sgn(c) < 0) throw std::invalid_argument("domination counts are nonnegative");
}

BigInt eval_at(const DominationPolynomial& p, const BigInt& z) {
  BigInt acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::size_t domination_number(const DominationPolynomial& p) {
  if (p.nverts() == 0) return 0;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (sgn(c[k]) > 0) return k;
  throw std::logic_error("polynomial has no dominating set");
}

long first_difference(const DominationPolynomial& p, const DominationPolynomial& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] != b[k]) return static_cast<long>(k);
  return a.size() == b.size() ? -1 : static_cast<long>(n);
}

std::vector<std::string> invariant_violations(const DominationPolynomial& p) {
  std::vector<std::string> out;
  const auto& c = p.coeffs();
  const std::size_t n = p.nverts();
  if (c[n] != 1) out.push_back("top coefficient N_|V| is not 1");
  if (c[0] != (n == 0 ? 1 : 0)) out.push_back("N_0 must be 1 on the empty board and 0 otherwise");

  std::size_t k = 0;
  while (k < n && sgn(c[k]) == 0) ++k;
  for (; k <= n; ++k)
    if (sgn(c[k]) == 0) {
      out.push_back("support is not contiguous up to |V| (gap at k=" + std::to_string(k) + ")");
      break;
    }

  BigInt total = 0;
  for (const auto& x : c) total += x;
  if (mpz_odd_p(total.get_mpz_t()) == 0) out.push_back("P(1) is even");
  return out;
}

void check_invariants(const DominationPolynomial& p) {
  auto bad = invariant_violations(p);
  if (bad.empty()) return;
  std::string msg = "domination polynomial invariant violated:";
  for (const auto& b : bad) msg += " " + b + ";";
  throw std::logic_error(msg);
}

std::string to_json(const DominationPolynomial& p, const std::string& board) {
  nlohmann::ordered_json j;
  j["board"] = board;
  j["nverts"] = p.nverts();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  j["coeffs"] = std::move(coeffs);
  j["gamma"] = domination_number(p);
  j["eval"]["-1"] = eval_at(p, -1).get_str();
  j["eval"]["1"] = eval_at(p, 1).get_str();
  return j.dump();
}

DominationPolynomial polynomial_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>(), 10);
    return DominationPolynomial(std::move(coeffs));
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
}

}  // namespace kingdom
