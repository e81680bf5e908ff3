#pragma once

#include <string_view>

#include "kingdom/board.hpp"
#include "kingdom/poly.hpp"

namespace kingdom {

enum class Method { Auto, Transfer, Oracle };

Method parse_method(std::string_view text);
std::string_view to_string(Method method);

struct EngineOptions {
  Method method = Method::Auto;
  unsigned threads = 0;
  bool prune = true;
  bool force = false;
};

/// Auto picks the column sweep for supported 2-d boards and the oracle otherwise.
Method resolve_method(const BoardSpec& spec, Method requested);

DominationPolynomial compute_polynomial(const BoardSpec& spec, const EngineOptions& opts = {});

/// P(z). The oracle path uses the direct signed count when z = -1.
BigInt compute_eval(const BoardSpec& spec, long z, const EngineOptions& opts = {});

}  // namespace kingdom
