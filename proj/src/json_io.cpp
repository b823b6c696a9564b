#include "scrollacm/json_io.hpp"

#include <stdexcept>

namespace scrollacm {

json integer_json(const Integer& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.get_str();
}

json rational_json(const Rational& v) {
  if (v.get_den() == 1) return integer_json(v.get_num());
  return to_string(v);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string, got " + j.dump());
}

Integer integer_from_json(const json& j) {
  const Rational r = rational_from_json(j);
  if (r.get_den() != 1) throw std::invalid_argument("expected an integer, got " + j.dump());
  return r.get_num();
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw std::invalid_argument(std::string("field \"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

json to_json(const Scroll& s) { return {{"theta", s.theta()}, {"epsilon", s.epsilon()}}; }

Scroll scroll_from_json(const json& j) {
  return Scroll(to_int64(integer_from_json(field(j, "theta"))), to_int64(integer_from_json(field(j, "epsilon"))));
}

json to_json(const DivisorClass& d) { return {{"H", integer_json(d.alpha)}, {"F", integer_json(d.beta)}}; }

DivisorClass divisor_from_json(const json& j) {
  return {integer_from_json(field(j, "H")), integer_from_json(field(j, "F"))};
}

json to_json(const ChernCharacter& c) {
  return {{"rank", integer_json(c.rank)}, {"c1", to_json(c.c1)}, {"ch2_times2", integer_json(c.ch2_times2)}};
}

ChernCharacter character_from_json(const json& j) {
  return {integer_from_json(field(j, "rank")), divisor_from_json(field(j, "c1")),
          integer_from_json(field(j, "ch2_times2"))};
}

json to_json(const DimensionVector& d) { return {{"b", integer_json(d.b)}, {"a", integer_json(d.a)}}; }

DimensionVector dimension_vector_from_json(const json& j) {
  return {integer_from_json(field(j, "b")), integer_from_json(field(j, "a"))};
}

json to_json(const BraidWord& k) { return {{"k", k.k()}}; }

BraidWord braid_word_from_json(const json& j) {
  const json& k = field(j, "k");
  if (!k.is_array()) throw std::invalid_argument("\"k\" must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : k) {
    if (!x.is_number_integer()) throw std::invalid_argument("\"k\" must be an array of integers");
    out.push_back(x.get<std::int64_t>());
  }
  return BraidWord(out);
}

json to_json(const TriVector& v) { return json::array({integer_json(v.v1), integer_json(v.v2), integer_json(v.v3)}); }

json to_json(const Cohomology& c) {
  return {{"h0", integer_json(c.h0)}, {"h1", integer_json(c.h1)}, {"h2", integer_json(c.h2)},
          {"chi", integer_json(c.euler())}};
}

json to_json(const BundleDescriptor& d) {
  json j = {{"tag", family_tag(d.family)},
            {"name", d.name},
            {"rank", integer_json(d.rank())},
            {"c1", to_json(d.c1())},
            {"ch2_times2", integer_json(d.character.ch2_times2)},
            {"slope", to_string(d.slope)},
            {"a", d.a ? integer_json(*d.a) : json(nullptr)},
            {"b", d.b ? integer_json(*d.b) : json(nullptr)},
            {"rigid", d.rigid},
            {"exceptional", d.exceptional},
            {"ulrich", d.ulrich},
            {"word", d.word}};
  if (d.point) j["point"] = *d.point;
  if (d.extension) {
    j["extension"] = {{"sub", to_json(d.extension->sub)},
                      {"quotient", to_json(d.extension->quotient)},
                      {"certificate", to_json(d.extension->certificate)},
                      {"h1", integer_json(d.extension->h1)}};
  }
  return j;
}

json to_json(const std::vector<BundleDescriptor>& ds) {
  json arr = json::array();
  for (const auto& d : ds) arr.push_back(to_json(d));
  return arr;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw std::invalid_argument("matrix must have " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw std::invalid_argument("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(row[c]);
  }
  return m;
}

json to_json(const MatrixPencil& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"M1", to_json(m.M1())}, {"M2", to_json(m.M2())}};
}

MatrixPencil pencil_from_json(const json& j) {
  const std::size_t rows = size_field(j, "rows"), cols = size_field(j, "cols");
  return {matrix_from_json(field(j, "M1"), rows, cols), matrix_from_json(field(j, "M2"), rows, cols)};
}

json to_json(const KWBlock& b) {
  json j;
  switch (b.kind) {
    case BlockKind::C: j = {{"kind", "C"}, {"u", b.size}}; break;
    case BlockKind::B: j = {{"kind", "B"}, {"v", b.size}}; break;
    case BlockKind::J: j = {{"kind", "J"}, {"u", b.point ? to_string(*b.point) : "inf"}, {"n", b.size}}; break;
    case BlockKind::Companion: {
      json coeffs = json::array();
      for (const auto& c : b.poly.coeffs()) coeffs.push_back(rational_json(c));
      j = {{"kind", "Companion"}, {"poly", coeffs}, {"n", b.size}};
      break;
    }
    case BlockKind::Zero: j = {{"kind", "Zero"}, {"a0", b.a0}, {"b0", b.b0}}; break;
  }
  if (b.multiplicity != 1) j["mult"] = b.multiplicity;
  return j;
}

KWBlock block_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  const std::size_t mult = j.contains("mult") ? size_field(j, "mult") : 1;
  if (kind == "C") return KWBlock::C(size_field(j, "u"), mult);
  if (kind == "B") return KWBlock::B(size_field(j, "v"), mult);
  if (kind == "J") {
    const json& u = field(j, "u");
    if (u.is_string() && u.get<std::string>() == "inf") return KWBlock::J_infinity(size_field(j, "n"), mult);
    return KWBlock::J(rational_from_json(u), size_field(j, "n"), mult);
  }
  if (kind == "Companion") {
    std::vector<Rational> coeffs;
    for (const auto& c : field(j, "poly")) coeffs.push_back(rational_from_json(c));
    return KWBlock::Companion(Polynomial(coeffs), size_field(j, "n"), mult);
  }
  if (kind == "Zero") {
    KWBlock z = KWBlock::Zero(size_field(j, "a0"), size_field(j, "b0"));
    z.a0 *= mult;
    z.b0 *= mult;
    return z;
  }
  throw std::invalid_argument("unknown block kind \"" + kind + "\"");
}

json to_json(const KWDecomposition& d, bool with_witnesses) {
  json blocks = json::array();
  for (const auto& b : d.blocks) blocks.push_back(to_json(b));
  json j = {{"blocks", blocks}};
  if (with_witnesses) {
    j["P"] = to_json(d.P);
    j["Q"] = to_json(d.Q);
  }
  return j;
}

}  // namespace scrollacm
