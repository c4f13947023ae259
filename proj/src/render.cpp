#include "postlie/render.hpp"

#include <json.hpp>
#include <stdexcept>

namespace postlie {

using Json = nlohmann::ordered_json;

namespace {

Json tree_to_json(const PlanarTree& t) {
  Json d;
  switch (t.dec.kind) {
    case Decoration::Kind::Unlabeled: d["unl"] = true; break;
    case Decoration::Kind::Label: d["lab"] = t.dec.label; break;
    case Decoration::Kind::Symbol: d["sym"] = t.dec.symbol; break;
  }
  Json c = Json::array();
  for (const auto& ch : t.children) c.push_back(tree_to_json(ch));
  return Json{{"d", std::move(d)}, {"c", std::move(c)}};
}

PlanarTree tree_of_json(const Json& j) {
  if (!j.is_object() || !j.contains("d"))
    throw std::invalid_argument("tree: expected an object with \"d\"");
  const Json& d = j.at("d");
  PlanarTree t;
  if (d.contains("sym") && d.at("sym").is_string())
    t.dec = Decoration::of_symbol(d.at("sym").get<std::string>());
  else if (d.contains("lab") && d.at("lab").is_number_integer())
    t.dec = Decoration::of_label(d.at("lab").get<int>());
  else if (d.contains("unl"))
    t.dec = Decoration::unlabeled();
  else
    throw std::invalid_argument("tree: decoration needs sym, lab or unl");
  if (j.contains("c")) {
    if (!j.at("c").is_array())
      throw std::invalid_argument("tree: \"c\" must be an array");
    for (const Json& ch : j.at("c")) t.children.push_back(tree_of_json(ch));
  }
  return t;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
}

Rational coef_of_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("coef must be a string");
  return parse_rational(j.get<std::string>());
}

std::string dump(const Json& j) { return j.dump(); }

std::string latex_dec(const Decoration& d) {
  switch (d.kind) {
    case Decoration::Kind::Unlabeled: return "\\uv";
    case Decoration::Kind::Label: return std::to_string(d.label);
    case Decoration::Kind::Symbol: return d.symbol;
  }
  return "";
}

std::string latex_tree(const PlanarTree& t) {
  std::string out = "\\T{" + latex_dec(t.dec) + "}{";
  for (size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ",";
    out += latex_tree(t.children[i]);
  }
  return out + "}";
}

// Appends "sign magnitude body" for one term of a sum.
void latex_term(std::string& out, const Rational& c, const std::string& body) {
  const Rational m = abs(c);
  if (out.empty()) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (m != 1) {
    if (denominator(m) == 1)
      out += numerator(m).str() + "\\," ;
    else
      out += "\\frac{" + numerator(m).str() + "}{" + denominator(m).str() +
             "}\\,";
  }
  out += body;
}

std::string dec_text(const Decoration& d) {
  switch (d.kind) {
    case Decoration::Kind::Unlabeled: return "*";
    case Decoration::Kind::Label: return std::to_string(d.label);
    case Decoration::Kind::Symbol: return d.symbol;
  }
  return "";
}

void ascii_rec(const PlanarTree& t, const std::string& prefix,
               std::string& out) {
  for (size_t i = 0; i < t.children.size(); ++i) {
    bool last = i + 1 == t.children.size();
    out += prefix + (last ? "`- " : "|- ") + dec_text(t.children[i].dec) + "\n";
    ascii_rec(t.children[i], prefix + (last ? "   " : "|  "), out);
  }
}

std::string ascii_tree_block(const PlanarTree& t, const std::string& indent) {
  std::string out = indent + dec_text(t.dec) + "\n";
  std::string body;
  ascii_rec(t, indent, body);
  return out + body;
}

std::string coef_label(const Rational& c) {
  return (c < 0 ? "(" + rational_str(c) + ")" : "(+" + rational_str(c) + ")");
}

}  // namespace

std::string tree_json(const PlanarTree& t) { return dump(tree_to_json(t)); }

std::string operad_json(const OperadElement& x) {
  Json terms = Json::array();
  for (const auto& [t, c] : x.terms)
    terms.push_back(Json{{"coef", rational_str(c)}, {"tree", tree_to_json(t)}});
  return dump(Json{{"arity", x.arity}, {"terms", std::move(terms)}});
}

std::string env_json(const EnvElement& x) {
  Json terms = Json::array();
  for (const auto& [f, c] : x.terms) {
    Json forest = Json::array();
    for (const auto& t : f) forest.push_back(tree_to_json(t));
    terms.push_back(
        Json{{"coef", rational_str(c)}, {"forest", std::move(forest)}});
  }
  return dump(Json{{"terms", std::move(terms)}});
}

std::string algebra_json(const StructAlgebra& A) {
  auto tensor = [](const std::map<std::tuple<int, int, int>, Rational>& m) {
    Json out = Json::array();
    for (const auto& [ijk, v] : m) {
      if (v == 0) continue;
      out.push_back(Json::array({std::get<0>(ijk), std::get<1>(ijk),
                                 std::get<2>(ijk), rational_str(v)}));
    }
    return out;
  };
  return dump(Json{{"dim", A.dim},
                   {"basis", A.basis},
                   {"bracket", tensor(A.bracket_c)},
                   {"triangle", tensor(A.triangle_c)}});
}

PlanarTree tree_from_json(const std::string& text) {
  return tree_of_json(parse_text(text));
}

OperadElement operad_from_json(const std::string& text) {
  const Json j = parse_text(text);
  if (!j.is_object() || !j.contains("arity") || !j.contains("terms") ||
      !j.at("arity").is_number_integer() || !j.at("terms").is_array())
    throw std::invalid_argument("operad element: need arity and terms");
  OperadElement x = op_zero(j.at("arity").get<int>());
  for (const Json& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("coef") || !term.contains("tree"))
      throw std::invalid_argument("operad term: need coef and tree");
    PlanarTree t = tree_of_json(term.at("tree"));
    if (tree_arity(t) != x.arity)
      throw std::invalid_argument("operad term: arity mismatch");
    x = op_add(x, op_term(t, coef_of_json(term.at("coef"))));
  }
  return x;
}

EnvElement env_from_json(const std::string& text) {
  const Json j = parse_text(text);
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("envelope element: need terms");
  EnvElement x = env_zero();
  for (const Json& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("coef") || !term.contains("forest") ||
        !term.at("forest").is_array())
      throw std::invalid_argument("envelope term: need coef and forest");
    Forest f;
    for (const Json& t : term.at("forest")) f.push_back(tree_of_json(t));
    env_accum(x, env_term(f, coef_of_json(term.at("coef"))));
  }
  return x;
}

StructAlgebra algebra_from_json(const std::string& text) {
  const Json j = parse_text(text);
  if (!j.is_object() || !j.contains("dim") || !j.at("dim").is_number_integer())
    throw std::invalid_argument("algebra: need dim");
  StructAlgebra A;
  A.dim = j.at("dim").get<int>();
  if (A.dim < 0) throw std::invalid_argument("algebra: negative dim");
  if (j.contains("basis")) {
    if (!j.at("basis").is_array())
      throw std::invalid_argument("algebra: basis must be an array");
    for (const Json& b : j.at("basis")) {
      if (!b.is_string()) throw std::invalid_argument("algebra: basis names");
      A.basis.push_back(b.get<std::string>());
    }
  } else {
    for (int i = 0; i < A.dim; ++i) A.basis.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(A.basis.size()) != A.dim)
    throw std::invalid_argument("algebra: basis size differs from dim");
  auto load = [&](const char* key,
                  std::map<std::tuple<int, int, int>, Rational>& out) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_array())
      throw std::invalid_argument(std::string("algebra: ") + key);
    for (const Json& e : j.at(key)) {
      if (!e.is_array() || e.size() != 4)
        throw std::invalid_argument("algebra: tensor entries are [i,j,k,coef]");
      int i = e.at(0).get<int>(), jj = e.at(1).get<int>(), k = e.at(2).get<int>();
      for (int idx : {i, jj, k})
        if (idx < 0 || idx >= A.dim)
          throw std::invalid_argument("algebra: index out of range");
      Rational v = coef_of_json(e.at(3));
      if (v != 0) out[{i, jj, k}] = v;
    }
  };
  load("bracket", A.bracket_c);
  load("triangle", A.triangle_c);
  return A;
}

std::string tree_latex(const PlanarTree& t) { return latex_tree(t); }

std::string operad_latex(const OperadElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [t, c] : x.terms) latex_term(out, c, latex_tree(t));
  return out;
}

std::string env_latex(const EnvElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [f, c] : x.terms) {
    std::string body;
    if (f.empty()) body = "\\mathbf{1}";
    for (size_t i = 0; i < f.size(); ++i) {
      if (i) body += "\\,";
      body += latex_tree(f[i]);
    }
    latex_term(out, c, body);
  }
  return out;
}

std::string tree_ascii(const PlanarTree& t) { return ascii_tree_block(t, ""); }

std::string operad_ascii(const OperadElement& x) {
  if (x.is_zero()) return "0\n";
  std::string out;
  for (const auto& [t, c] : x.terms) {
    out += coef_label(c) + " " + tree_str(t) + "\n";
    out += ascii_tree_block(t, "    ");
  }
  return out;
}

std::string env_ascii(const EnvElement& x) {
  if (x.is_zero()) return "0\n";
  std::string out;
  for (const auto& [f, c] : x.terms) {
    out += coef_label(c) + " " + forest_str(f) + "\n";
    for (const auto& t : f) out += ascii_tree_block(t, "    ");
  }
  return out;
}

}  // namespace postlie
