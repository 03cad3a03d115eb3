#include "srfr/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace srfr {

namespace {

struct Line {
  std::string keyword;
  std::vector<long long> values;
};

std::optional<Line> next_line(std::istream& in) {
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line;
    if (!(ls >> line.keyword)) continue;  // blank or comment-only
    long long v;
    while (ls >> v) line.values.push_back(v);
    if (!ls.eof()) throw std::invalid_argument("instance: non-integer token on '" + line.keyword + "' line");
    return line;
  }
  return std::nullopt;
}

Polynomial poly_from(const PrimeField& F, const std::vector<long long>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.push_back(F.element(v));
  return Polynomial(std::move(c));
}

}  // namespace

SRFRInstance parse_instance(std::istream& in) {
  auto first = next_line(in);
  if (!first || first->keyword != "p" || first->values.size() != 1)
    throw std::invalid_argument("instance: expected 'p <prime>' first");
  if (first->values[0] < 3) throw std::invalid_argument("instance: modulus too small");
  PrimeField F(static_cast<std::uint64_t>(first->values[0]));

  std::vector<Polynomial> moduli, u;
  std::vector<int> N;
  std::optional<int> D;
  bool in_a = true;
  while (auto line = next_line(in)) {
    if (line->keyword == "a") {
      if (!in_a) throw std::invalid_argument("instance: 'a' line after 'u' lines");
      moduli.push_back(poly_from(F, line->values));
    } else if (line->keyword == "u") {
      in_a = false;
      u.push_back(poly_from(F, line->values));
    } else if (line->keyword == "N") {
      for (long long v : line->values) {
        if (v < 1) throw std::invalid_argument("instance: N entries must be positive");
        N.push_back(static_cast<int>(v));
      }
    } else if (line->keyword == "D") {
      if (line->values.size() != 1 || line->values[0] < 1)
        throw std::invalid_argument("instance: bad 'D' line");
      D = static_cast<int>(line->values[0]);
    } else {
      throw std::invalid_argument("instance: unknown keyword '" + line->keyword + "'");
    }
  }
  if (moduli.empty()) throw std::invalid_argument("instance: no moduli");
  if (u.size() != moduli.size()) throw std::invalid_argument("instance: 'u' count mismatch");
  if (N.size() != moduli.size()) throw std::invalid_argument("instance: 'N' count mismatch");
  if (!D) throw std::invalid_argument("instance: missing 'D'");
  return SRFRInstance(ModuliSet(F, std::move(moduli)), std::move(u), std::move(N), *D);
}

SRFRInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("instance: cannot open " + path);
  return parse_instance(in);
}

namespace {

void write_poly_line(std::ostream& out, const char* kw, const Polynomial& p) {
  out << kw;
  if (p.is_zero()) {
    out << " 0";
  } else {
    for (int i = 0; i <= p.degree(); ++i) out << ' ' << p.coeff(i).value();
  }
  out << '\n';
}

}  // namespace

void write_instance(std::ostream& out, const SRFRInstance& inst) {
  out << "p " << inst.mods.field().modulus() << '\n';
  for (std::size_t i = 0; i < inst.mods.count(); ++i)
    write_poly_line(out, "a", inst.mods.modulus(i));
  for (const auto& ui : inst.u) write_poly_line(out, "u", ui);
  out << "N";
  for (int b : inst.N) out << ' ' << b;
  out << "\nD " << inst.D << '\n';
}

std::string format_instance(const SRFRInstance& inst) {
  std::ostringstream os;
  write_instance(os, inst);
  return os.str();
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace srfr
