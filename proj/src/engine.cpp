#include "kingdom/engine.hpp"

#include <string>

#include "kingdom/errors.hpp"
#include "kingdom/oracle.hpp"
#include "kingdom/transfer.hpp"

namespace kingdom {

Method parse_method(std::string_view text) {
  if (text == "auto") return Method::Auto;
  if (text == "transfer") return Method::Transfer;
  if (text == "oracle") return Method::Oracle;
  throw ParseError("unknown method '" + std::string(text) + "' (expected auto, transfer or oracle)");
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Transfer:
      return "transfer";
    case Method::Oracle:
      return "oracle";
    default:
      return "auto";
  }
}

Method resolve_method(const BoardSpec& spec, Method requested) {
  if (requested != Method::Auto) return requested;
  return transfer_supported(spec) ? Method::Transfer : Method::Oracle;
}

namespace {

TransferOptions transfer_options(const EngineOptions& opts) { return {opts.threads, opts.prune}; }
OracleOptions oracle_options(const EngineOptions& opts) { return {opts.force, opts.threads}; }

}  // namespace

DominationPolynomial compute_polynomial(const BoardSpec& spec, const EngineOptions& opts) {
  if (resolve_method(spec, opts.method) == Method::Transfer)
    return transfer_polynomial(spec, transfer_options(opts));
  return enumerate_polynomial(spec, oracle_options(opts));
}

BigInt compute_eval(const BoardSpec& spec, long z, const EngineOptions& opts) {
  if (resolve_method(spec, opts.method) == Method::Transfer)
    return transfer_eval(spec, z, transfer_options(opts));
  if (z == -1) return eval_signed_count(spec, oracle_options(opts));
  return eval_at(enumerate_polynomial(spec, oracle_options(opts)), BigInt(z));
}

}  // namespace kingdom
