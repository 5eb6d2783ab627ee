#include "weylkit/render.hpp"

#include <json.hpp>

#include <stdexcept>
#include <vector>

namespace weylkit {

namespace {

struct Piece {
  bool negative = false;
  std::string body;  // factor string without sign
};

std::string power_text(const std::string& base, unsigned e, bool latex) {
  if (e == 1) return base;
  if (latex) return base + "^{" + std::to_string(e) + "}";
  return base + "^" + std::to_string(e);
}

// one additive piece per (poly monomial, operator monomial) pair
Piece make_piece(const PolyExp& exp, const GaussianRational& v, const OpKey& key, bool latex) {
  Piece piece;
  std::vector<std::string> factors;

  Rational re = v.re(), im = v.im();
  std::string numeric;
  bool numeric_is_one = false;
  if (im.is_zero()) {
    piece.negative = re < Rational(0);
    Rational mag = piece.negative ? -re : re;
    numeric_is_one = mag.is_one();
    if (latex)
      numeric = mag.is_integer() ? mag.num().get_str()
                                 : "\\frac{" + mag.num().get_str() + "}{" + mag.den().get_str() + "}";
    else
      numeric = mag.str();
  } else if (re.is_zero()) {
    piece.negative = im < Rational(0);
    Rational mag = piece.negative ? -im : im;
    if (mag.is_one()) {
      numeric = "i";
    } else if (latex) {
      numeric = (mag.is_integer() ? mag.num().get_str()
                                  : "\\frac{" + mag.num().get_str() + "}{" + mag.den().get_str() + "}") +
                " i";
    } else {
      numeric = mag.str() + "*i";
    }
  } else {
    // mixed real and imaginary part: keep the whole scalar parenthesized
    piece.negative = false;
    std::string rs = latex && !re.is_integer()
                         ? "\\frac{" + re.num().get_str() + "}{" + re.den().get_str() + "}"
                         : re.str();
    Rational imag = im < Rational(0) ? -im : im;
    std::string is;
    if (imag.is_one())
      is = "i";
    else if (latex)
      is = (imag.is_integer() ? imag.num().get_str()
                              : "\\frac{" + imag.num().get_str() + "}{" + imag.den().get_str() + "}") +
           " i";
    else
      is = imag.str() + "*i";
    numeric = "(" + rs + (im < Rational(0) ? " - " : " + ") + is + ")";
  }

  if (!numeric_is_one) factors.push_back(numeric);
  for (int k = 0; k < 3; ++k) {
    if (exp.e[k] == 0) continue;
    factors.push_back(power_text(symbol_name(static_cast<Symbol>(k)), exp.e[k], latex));
  }
  if (key.y > 0) factors.push_back(power_text("Y", static_cast<unsigned>(key.y), latex));
  if (key.x > 0) factors.push_back(power_text("X", static_cast<unsigned>(key.x), latex));
  if (factors.empty()) factors.push_back(latex ? "1" : "1");

  std::string sep = latex ? " " : "*";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) piece.body += sep;
    piece.body += factors[k];
  }
  return piece;
}

std::string render_pieces(const NormalForm& form, bool latex) {
  if (form.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : form.terms()) {
    for (const auto& [exp, v] : coeff.terms()) {
      Piece piece = make_piece(exp, v, key, latex);
      if (first) {
        // a leading negative must still re-parse: fold the sign into an
        // explicit numeric factor
        if (piece.negative) {
          if (!latex && (piece.body.empty() || !std::isdigit(static_cast<unsigned char>(piece.body[0]))))
            out = "-1*" + piece.body;
          else
            out = "-" + piece.body;
        } else {
          out = piece.body;
        }
        first = false;
      } else {
        out += piece.negative ? " - " : " + ";
        out += piece.body;
      }
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const NormalForm& form) {
  nlohmann::ordered_json root;
  root["basis"] = "YX";
  root["symbols"] = nlohmann::ordered_json::array({"c", "s", "t"});
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [key, coeff] : form.terms()) {
    nlohmann::ordered_json term;
    term["y"] = key.y;
    term["x"] = key.x;
    auto monomials = nlohmann::ordered_json::array();
    for (const auto& [exp, v] : coeff.terms()) {
      nlohmann::ordered_json mono;
      mono["c"] = exp.e[0];
      mono["s"] = exp.e[1];
      mono["t"] = exp.e[2];
      mono["re"] = v.re().str_explicit();
      mono["im"] = v.im().str_explicit();
      monomials.push_back(std::move(mono));
    }
    term["coeff"] = std::move(monomials);
    terms.push_back(std::move(term));
  }
  root["terms"] = std::move(terms);
  return root;
}

}  // namespace

std::string render(const NormalForm& form, RenderFormat format) {
  switch (format) {
    case RenderFormat::text: return render_pieces(form, false);
    case RenderFormat::latex: return render_pieces(form, true);
    case RenderFormat::json: return to_json(form).dump();
  }
  throw std::logic_error("render: bad format");
}

NormalForm normal_form_from_json(const std::string& text) {
  nlohmann::json root = nlohmann::json::parse(text);
  if (root.value("basis", "") != "YX")
    throw std::invalid_argument("normal_form_from_json: basis must be \"YX\"");
  NormalForm out;
  for (const auto& term : root.at("terms")) {
    int y = term.at("y").get<int>();
    int x = term.at("x").get<int>();
    PolyCoeff coeff;
    for (const auto& mono : term.at("coeff")) {
      PolyExp exp;
      exp.e[0] = mono.at("c").get<unsigned>();
      exp.e[1] = mono.at("s").get<unsigned>();
      exp.e[2] = mono.at("t").get<unsigned>();
      Rational re = Rational::from_string(mono.at("re").get<std::string>());
      Rational im = Rational::from_string(mono.at("im").get<std::string>());
      coeff += PolyCoeff::monomial(exp, GaussianRational(re, im));
    }
    out += NormalForm::monomial(y, x, coeff);
  }
  return out;
}

RenderFormat render_format_from_name(const std::string& name) {
  if (name == "text") return RenderFormat::text;
  if (name == "latex") return RenderFormat::latex;
  if (name == "json") return RenderFormat::json;
  throw std::invalid_argument("unknown format '" + name + "'");
}

}  // namespace weylkit
