#include "xxz/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace xxz {

using nlohmann::json;

json rootset_to_json(const RootSet& rs, int n, Complex eta) {
  json roots = json::array();
  for (const Complex& r : rs.roots)
    roots.push_back({{"re", r.real()}, {"im", r.imag()}});
  return json{{"n", n},
              {"eta", {{"re", eta.real()}, {"im", eta.imag()}}},
              {"roots", roots},
              {"residual", rs.residual},
              {"on_shell", rs.on_shell}};
}

RootFileEntry rootset_from_json(const json& j) {
  RootFileEntry e;
  e.n = j.at("n").get<int>();
  e.eta = Complex{j.at("eta").at("re").get<double>(),
                  j.at("eta").at("im").get<double>()};
  for (const auto& r : j.at("roots"))
    e.roots.roots.emplace_back(r.at("re").get<double>(), r.at("im").get<double>());
  e.roots.residual = j.value("residual", 0.0);
  e.roots.on_shell = j.value("on_shell", false);
  if (e.roots.roots.size() != static_cast<std::size_t>(e.n))
    throw std::invalid_argument("rootset_from_json: root count mismatch");
  return e;
}

RootFileEntry load_rootset(const std::string& path, int index) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open root file: " + path);
  json j;
  in >> j;
  if (j.is_array()) {
    if (index >= static_cast<int>(j.size()))
      throw std::runtime_error("root file has too few entries: " + path);
    return rootset_from_json(j[index]);
  }
  return rootset_from_json(j);
}

namespace {

std::uint64_t fnv1a(const unsigned char* data, std::size_t len,
                    std::uint64_t h = 0xcbf29ce484222325ull) {
  for (std::size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string digest(const std::vector<Complex>& values) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const Complex& c : values) {
    double parts[2] = {c.real(), c.imag()};
    unsigned char bytes[sizeof parts];
    std::memcpy(bytes, parts, sizeof parts);
    h = fnv1a(bytes, sizeof bytes, h);
  }
  return hex64(h);
}

std::string digest_params(const ChainParams& p) {
  std::vector<Complex> v;
  v.emplace_back(static_cast<double>(p.n), 0.0);
  v.push_back(p.eta);
  v.insert(v.end(), p.thetas.begin(), p.thetas.end());
  return digest(v);
}

json result_record(const std::string& kind, int site, Complex value,
                   const std::string& method, const ChainParams& p,
                   const RootSet& left, const RootSet& right) {
  return json{{"kind", kind},
              {"site", site},
              {"value", {{"re", value.real()}, {"im", value.imag()}}},
              {"method", method},
              {"params_digest", digest_params(p)},
              {"left_digest", digest(left.roots)},
              {"right_digest", digest(right.roots)}};
}

std::string format_sig15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.14e", x);
  return buf;
}

std::string format_sig15(Complex x) {
  return format_sig15(x.real()) + (x.imag() < 0 ? "" : "+") +
         format_sig15(x.imag()) + "i";
}

}  // namespace xxz
