#ifndef SATAKE_SERIALIZE_HPP
#define SATAKE_SERIALIZE_HPP

// Canonical text records for SpectralParams and UnitaryClass.
//
//   {"n": 2, "values": [["0x1.4p+3", "0x0p+0"], ...], "prime_norm": 7 | null,
//    "pairing": [1, 0], "tolerance": "0x1.12e0be826d695p-30"}
//
// Reals are written as C99 hexadecimal floats (bit-exact); readers also
// accept ordinary decimal strings and JSON numbers.

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "satake/params.hpp"

namespace satake {

inline std::string hexfloat(double x)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

inline double parse_real(const nlohmann::json& j)
{
  if (j.is_number())
    return j.get<double>();
  if (!j.is_string())
    throw std::invalid_argument("parse_real: expected a number or numeric string");
  const std::string s = j.get<std::string>();
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw std::invalid_argument("parse_real: malformed number '" + s + "'");
  return x;
}

inline nlohmann::json to_json(const SpectralParams& p)
{
  nlohmann::json values = nlohmann::json::array();
  for (const Complex& z : p.values())
    values.push_back({hexfloat(z.real()), hexfloat(z.imag())});
  nlohmann::json out;
  out["n"] = p.rank();
  out["values"] = std::move(values);
  out["prime_norm"] = p.prime_norm() ? nlohmann::json(*p.prime_norm()) : nlohmann::json(nullptr);
  return out;
}

inline nlohmann::json to_json(const UnitaryClass& u)
{
  nlohmann::json out = to_json(u.params());
  out["pairing"] = nlohmann::json::array();
  for (std::size_t s : u.pairing())
    out["pairing"].push_back(s);
  out["tolerance"] = hexfloat(u.tolerance());
  return out;
}

inline SpectralParams spectral_params_from_json(const nlohmann::json& j)
{
  std::vector<Complex> values;
  for (const auto& v : j.at("values")) {
    if (!v.is_array() || v.size() != 2)
      throw std::invalid_argument("spectral_params_from_json: values must be [re, im] pairs");
    values.emplace_back(parse_real(v[0]), parse_real(v[1]));
  }
  if (j.contains("n") && j.at("n").get<std::size_t>() != values.size())
    throw std::invalid_argument("spectral_params_from_json: n does not match the value count");
  std::optional<std::int64_t> np;
  if (j.contains("prime_norm") && !j.at("prime_norm").is_null())
    np = j.at("prime_norm").get<std::int64_t>();
  return SpectralParams(std::move(values), np);
}

inline UnitaryClass unitary_class_from_json(const nlohmann::json& j)
{
  auto params = spectral_params_from_json(j);
  const double tol = j.contains("tolerance") ? parse_real(j.at("tolerance")) : 1e-9;
  return UnitaryClass(std::move(params), j.at("pairing").get<std::vector<std::size_t>>(), tol);
}

}  // namespace satake

#endif  // SATAKE_SERIALIZE_HPP
