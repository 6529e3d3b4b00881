// Copyright 2026 The sze Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <sstream>

#include "sze/errors.hpp"
#include "sze/pauli.hpp"

namespace sze {

namespace {

std::string shortest(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

bool parse_coefficient(std::string_view tok, Complex& out) {
  if (tok.empty()) return false;
  if (tok.back() != 'i') {
    double re = 0.0;
    if (!parse_double(tok, re)) return false;
    out = {re, 0.0};
    return true;
  }
  tok.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = tok.size(); i-- > 1;) {
    if ((tok[i] == '+' || tok[i] == '-') && tok[i - 1] != 'e' &&
        tok[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  double re = 0.0, im = 0.0;
  if (split == std::string_view::npos) {
    if (tok.empty() || tok == "+") {
      im = 1.0;
    } else if (tok == "-") {
      im = -1.0;
    } else if (!parse_double(tok, im)) {
      return false;
    }
  } else {
    if (!parse_double(tok.substr(0, split), re)) return false;
    const std::string_view imag = tok.substr(split);
    if (imag == "+") {
      im = 1.0;
    } else if (imag == "-") {
      im = -1.0;
    } else if (!parse_double(imag, im)) {
      return false;
    }
  }
  out = {re, im};
  return true;
}

}  // namespace

std::string format_coefficient(Complex c) {
  if (c.real() == 0.0 && c.imag() != 0.0) return shortest(c.imag()) + "i";
  std::string out = shortest(c.real());
  if (c.imag() != 0.0) {
    const std::string im = shortest(c.imag());
    out += (im.front() == '-') ? im : "+" + im;
    out += 'i';
  }
  return out;
}

std::string format_terms(const PauliSum& s, std::string_view indent) {
  std::string out;
  for (const auto& [k, c] : s.terms()) {
    out += indent;
    out += format_coefficient(c);
    const PauliTerm t = s.term(k);
    if (!(k == PauliKey{})) {
      out += ' ';
      out += t.label();
    }
    out += '\n';
  }
  return out;
}

std::string to_text(const PauliSum& s) {
  return "n_qubits: " + std::to_string(s.n_qubits()) + "\n" + format_terms(s);
}

bool parse_term_line(std::string_view line, unsigned n_qubits, int line_no,
                     PauliSum::TermMap& out) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::istringstream in{std::string(line)};
  std::string coef_tok;
  if (!(in >> coef_tok)) return false;
  Complex c;
  if (!parse_coefficient(coef_tok, c)) {
    throw ParseError(line_no, "bad coefficient '" + coef_tok + "'");
  }
  std::string rest;
  std::getline(in, rest);
  try {
    const PauliTerm t = PauliTerm::parse(n_qubits, rest);
    out[t.key()] += c * t.phase();
  } catch (const ParseError&) {
    throw;
  } catch (const ConfigError& e) {
    throw ParseError(line_no, e.what());
  }
  return true;
}

PauliSum parse_pauli_sum(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  unsigned n = 0;
  PauliSum::TermMap terms;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    if (body.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    if (n == 0) {
      std::istringstream hdr{std::string(body)};
      std::string key;
      long value = 0;
      if (!(hdr >> key >> value) || key != "n_qubits:" || value <= 0 ||
          value > static_cast<long>(kMaxQubits)) {
        throw ParseError(line_no, "expected header 'n_qubits: <n>'");
      }
      n = static_cast<unsigned>(value);
      continue;
    }
    parse_term_line(body, n, line_no, terms);
  }
  if (n == 0) throw ParseError(line_no, "missing 'n_qubits:' header");
  return PauliSum(n, std::move(terms));
}

}  // namespace sze
