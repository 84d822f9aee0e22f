// Copyright 2026 The isoqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isoqubit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace isoqubit {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <typename T>
T expect(std::istream& is, const char* field) {
  T v;
  if (!(is >> v)) parse_fail(std::string("missing or malformed field '") + field + "'");
  return v;
}

}  // namespace

std::string net_to_json(const MeasurementNet& net) {
  json members = json::array();
  for (const auto& m : net.members) {
    json elems = json::array();
    for (const auto& e : m.elements()) {
      json rows = json::array();
      for (int r = 0; r < 2; ++r) {
        json row = json::array();
        for (int c = 0; c < 2; ++c) row.push_back({e(r, c).real(), e(r, c).imag()});
        rows.push_back(row);
      }
      elems.push_back(rows);
    }
    members.push_back(elems);
  }
  json doc = {{"q", net.q}, {"epsilon", net.epsilon}, {"members", members}};
  return doc.dump();
}

MeasurementNet net_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(std::string("net file: ") + e.what());
  }
  try {
    MeasurementNet net;
    net.q = doc.at("q").get<int>();
    net.epsilon = doc.at("epsilon").get<double>();
    for (const auto& m : doc.at("members")) {
      std::vector<Mat2> elems;
      for (const auto& rows : m) {
        Mat2 e;
        for (int r = 0; r < 2; ++r) {
          for (int c = 0; c < 2; ++c) {
            const auto& z = rows.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c));
            e(r, c) = Complex(z.at(0).get<double>(), z.at(1).get<double>());
          }
        }
        elems.push_back(e);
      }
      if (static_cast<int>(elems.size()) != net.q) parse_fail("member with wrong outcome count");
      net.members.push_back(Povm::rank1(std::move(elems)));
    }
    return net;
  } catch (const json::exception& e) {
    parse_fail(std::string("net file: ") + e.what());
  }
}

void write_code(std::ostream& os, const RandomCode& code, std::uint64_t seed) {
  os << code.k() << ' ' << code.n() << ' ' << seed << '\n';
  for (const auto& w : code.table()) os << w.to_hex() << '\n';
}

RandomCode read_code(std::istream& is, std::uint64_t* seed) {
  const int k = expect<int>(is, "k");
  const int n = expect<int>(is, "n");
  const auto s = expect<std::uint64_t>(is, "seed");
  if (k < 0 || k > kMaxCodeBits || n < 1) parse_fail("code header out of range");
  std::vector<BitVec> table;
  for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) {
    table.push_back(BitVec::from_hex(expect<std::string>(is, "codeword"), n));
  }
  if (seed) *seed = s;
  return RandomCode(k, n, std::move(table));
}

void write_ensemble(std::ostream& os, const HidingEnsemble& e, std::uint64_t seed) {
  os << e.nb() << ' ' << e.n() << ' ' << seed << '\n';
  for (std::size_t u = 0; u < e.rows(); ++u) {
    for (int a = 0; a < e.n(); ++a) {
      const int c = static_cast<int>(e.code(u, a));
      if (a) os << ' ';
      os << (c >> 1) << (c & 1);
    }
    os << '\n';
  }
}

HidingEnsemble read_ensemble(std::istream& is, std::uint64_t* seed) {
  const int nb = expect<int>(is, "nb");
  const int n = expect<int>(is, "n");
  const auto s = expect<std::uint64_t>(is, "seed");
  if (nb < 0 || nb > kMaxHidingBits || n < 1 || n > kMaxHidingBits) {
    parse_fail("ensemble header out of range");
  }
  std::vector<AlphaCode> codes;
  for (std::size_t i = 0; i < (std::size_t{1} << nb) * static_cast<std::size_t>(n); ++i) {
    const auto tok = expect<std::string>(is, "code");
    if (tok.size() != 2 || (tok[0] != '0' && tok[0] != '1') || (tok[1] != '0' && tok[1] != '1')) {
      parse_fail("bad two-bit code '" + tok + "'");
    }
    codes.push_back(alpha_code(tok[0] == '1', tok[1] == '1'));
  }
  if (seed) *seed = s;
  return HidingEnsemble(nb, n, std::move(codes));
}

void write_device(std::ostream& os, const OtmDevice& d) {
  os << d.params.n << ' ' << d.params.k << ' ' << format_double(d.params.theta) << ' '
     << format_double(d.params.tau) << ' ' << d.seed_c << ' ' << d.seed_d << '\n';
  write_code(os, d.code_c, d.seed_c);
  write_code(os, d.code_d, d.seed_d);
}

OtmDevice read_device(std::istream& is) {
  const int n = expect<int>(is, "n");
  const int k = expect<int>(is, "k");
  // strtod parses the %.17g text exactly.
  const double theta = std::stod(expect<std::string>(is, "theta"));
  const double tau = std::stod(expect<std::string>(is, "tau"));
  const auto seed_c = expect<std::uint64_t>(is, "seedC");
  const auto seed_d = expect<std::uint64_t>(is, "seedD");
  CodeParams p;
  p.n = n;
  p.k = k;
  p.theta = theta;
  p.tau = tau;
  p.p_e = channel_error_probability();
  p.r = n * (p.p_e + tau);
  OtmDevice d{p, read_code(is), read_code(is), seed_c, seed_d};
  validate_device(d);
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ConfigError, "cannot write " + path);
  out << contents;
}

}  // namespace isoqubit
