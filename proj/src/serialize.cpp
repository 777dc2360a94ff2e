#include "chromsym/serialize.hpp"

#include "chromsym/errors.hpp"

namespace chromsym {

Json to_json(const QPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
  return arr;
}

Json to_json(const QRat& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

Json to_json(const SymFun& f) {
  Json coeffs = Json::array();
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    coeffs.push_back(Json{{"partition", it->first},
                          {"num", to_json(it->second.num())},
                          {"den", to_json(it->second.den())}});
  }
  return Json{{"degree", f.degree()}, {"basis", std::string(1, basis_letter(f.basis()))}, {"coeffs", coeffs}};
}

Json to_json(const PathCombination& c) {
  Json terms = Json::array();
  for (const auto& [parts, coeff] : c.terms()) terms.push_back(Json{{"paths", parts}, {"coeff", to_json(coeff)}});
  return Json{{"n", c.n()}, {"terms", terms}};
}

QPoly qpoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
  std::vector<Rational> coeffs;
  for (const auto& item : j) {
    if (!item.is_string()) throw ParseError("coefficient must be a \"num/den\" string");
    Rational r;
    if (r.set_str(item.get<std::string>(), 10) != 0) {
      throw ParseError("bad rational '" + item.get<std::string>() + "'");
    }
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + item.get<std::string>() + "'");
    r.canonicalize();
    coeffs.push_back(r);
  }
  return QPoly(std::move(coeffs));
}

QRat qrat_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ParseError("rational function must be an object with num and den");
  }
  try {
    return QRat(qpoly_from_json(j.at("num")), qpoly_from_json(j.at("den")));
  } catch (const DivisionByZero& e) {
    throw ParseError(e.what());
  }
}

SymFun symfun_from_json(const Json& j) {
  try {
    const int degree = j.at("degree").get<int>();
    const Basis basis = parse_basis(j.at("basis").get<std::string>());
    SymFun f(degree, basis);
    for (const auto& term : j.at("coeffs")) {
      const auto lambda = term.at("partition").get<Partition>();
      validate_partition(lambda);
      f.add_term(lambda, qrat_from_json(term));
    }
    return f;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("symmetric function JSON: ") + e.what());
  } catch (const InvalidPartition& e) {
    throw ParseError(e.what());
  } catch (const DegreeMismatch& e) {
    throw ParseError(e.what());
  }
}

PathCombination paths_from_json(const Json& j) {
  try {
    PathCombination c(j.at("n").get<int>());
    for (const auto& term : j.at("terms")) {
      c.add(term.at("paths").get<std::vector<int>>(), qrat_from_json(term.at("coeff")));
    }
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what());
  } catch (const DegreeMismatch& e) {
    throw ParseError(e.what());
  }
}

}  // namespace chromsym
