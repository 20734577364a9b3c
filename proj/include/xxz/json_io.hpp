#pragma once

#include <string>

#include <json.hpp>

#include "xxz/model.hpp"

namespace xxz {

/// RootSet wire schema:
/// {"n": int, "eta": {"re","im"}, "roots": [{"re","im"},...],
///  "residual": float, "on_shell": bool}
nlohmann::json rootset_to_json(const RootSet& rs, int n, Complex eta);

struct RootFileEntry {
  int n = 0;
  Complex eta{};
  RootSet roots;
};

RootFileEntry rootset_from_json(const nlohmann::json& j);

/// First entry of a root file holding either a single record or an array.
RootFileEntry load_rootset(const std::string& path, int index = 0);

/// FNV-1a over the raw component doubles; stable input fingerprint for
/// result records.
std::string digest(const std::vector<Complex>& values);
std::string digest_params(const ChainParams& p);

nlohmann::json result_record(const std::string& kind, int site, Complex value,
                             const std::string& method, const ChainParams& p,
                             const RootSet& left, const RootSet& right);

std::string format_sig15(double x);
std::string format_sig15(Complex x);

}  // namespace xxz
