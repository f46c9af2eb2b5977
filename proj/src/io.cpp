#include "ncps/io.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace ncps {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

bool looks_like_json(const std::string& content) {
  std::string t = trim(content);
  return !t.empty() && t.front() == '{';
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

// header syntax: "<tag> key=value key=value ..."
std::map<std::string, std::string> parse_header(const std::string& line,
                                                const std::string& tag) {
  std::istringstream in(line);
  std::string head;
  in >> head;
  if (head != tag)
    throw std::invalid_argument("expected '" + tag + "' header, found '" + head + "'");
  std::map<std::string, std::string> fields;
  std::string item;
  while (in >> item) {
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("malformed header field '" + item + "'");
    fields[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return fields;
}

unsigned field_unsigned(const std::map<std::string, std::string>& fields,
                        const std::string& key, bool required, unsigned fallback = 0) {
  auto it = fields.find(key);
  if (it == fields.end()) {
    if (required) throw std::invalid_argument("missing header field '" + key + "'");
    return fallback;
  }
  return static_cast<unsigned>(std::stoul(it->second));
}

json terms_to_json(const std::map<Word, Scalar>& terms, unsigned even_letters) {
  json out = json::array();
  for (const auto& [word, c] : terms)
    out.push_back(json::array({word_str(word, even_letters), scalar_str(c)}));
  return out;
}

void terms_from_json(const json& arr, const VarScheme& scheme, auto&& sink) {
  if (!arr.is_array()) throw std::invalid_argument("terms must be an array");
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("term must be a [word, scalar] pair");
    Word word = parse_word(entry[0].get<std::string>(), scheme);
    Scalar c = parse_scalar(entry[1].get<std::string>());
    sink(word, c);
  }
}

NCSeries series_from_body(const std::string& body, const VarScheme& scheme,
                          unsigned degree) {
  return parse_series(body, scheme, degree).series;
}

std::vector<std::string> nonempty_lines(const std::string& content) {
  std::vector<std::string> lines;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (!t.empty()) lines.push_back(t);
  }
  return lines;
}

}  // namespace

Word parse_word(const std::string& text, const VarScheme& scheme) {
  std::string t = trim(text);
  if (t == "1") return Word{};
  std::vector<Letter> letters;
  for (const std::string& part : split(t, '*')) {
    std::string p = trim(part);
    if (p.size() < 2 || (p[0] != 'x' && p[0] != 'y'))
      throw std::invalid_argument("malformed word factor '" + p + "'");
    unsigned index = static_cast<unsigned>(std::stoul(p.substr(1)));
    if (p[0] == 'x') {
      if (index < 1 || index > scheme.even_vars())
        throw std::invalid_argument("unknown variable '" + p + "'");
      letters.push_back(index);
    } else {
      if (index < 1 || index > scheme.odd_vars)
        throw std::invalid_argument("unknown variable '" + p + "'");
      letters.push_back(scheme.even_vars() + index);
    }
  }
  return Word(std::move(letters));
}

Point parse_point(const std::string& text) {
  std::vector<Scalar> coords;
  for (const std::string& part : split(trim(text), ','))
    coords.push_back(parse_scalar(trim(part)));
  return Point(std::move(coords));
}

std::string point_str(const Point& point) {
  std::string out;
  for (unsigned k = 0; k < point.dim(); ++k) {
    if (k) out += ",";
    out += scalar_str(point[k]);
  }
  return out;
}

std::vector<Rational> parse_radii(const std::string& text) {
  std::vector<Rational> radii;
  for (const std::string& part : split(trim(text), ','))
    radii.push_back(parse_rational(trim(part)));
  return radii;
}

std::string write_series(const NCSeries& series, unsigned odd_vars, Format format) {
  if (format == Format::Json) {
    json out;
    out["type"] = "ncseries";
    out["n"] = series.vars();
    out["D"] = series.degree();
    out["r"] = odd_vars;
    out["terms"] =
        terms_to_json(series.terms(), odd_vars == 0 ? 0 : series.vars() - odd_vars);
    return out.dump() + "\n";
  }
  std::string header = "ncseries n=" + std::to_string(series.vars()) +
                       " D=" + std::to_string(series.degree());
  if (odd_vars > 0) header += " r=" + std::to_string(odd_vars);
  return header + "\n" + series_str(series, odd_vars) + "\n";
}

std::string write_comm_series(const CommSeries& series, Format format) {
  if (format == Format::Json) {
    json out;
    out["type"] = "commseries";
    out["n"] = series.vars();
    out["D"] = series.degree();
    out["terms"] = terms_to_json(series.terms(), 0);
    return out.dump() + "\n";
  }
  return "commseries n=" + std::to_string(series.vars()) +
         " D=" + std::to_string(series.degree()) + "\n" + comm_series_str(series) + "\n";
}

std::string write_morphism(const NCMorphism& morphism, Format format) {
  if (format == Format::Json) {
    json out;
    out["type"] = "ncmorphism";
    out["n"] = morphism.source_vars();
    out["m"] = morphism.target_vars();
    out["D"] = morphism.degree();
    json images = json::array();
    for (const NCSeries& img : morphism.images())
      images.push_back(terms_to_json(img.terms(), 0));
    out["images"] = images;
    return out.dump() + "\n";
  }
  std::string out = "ncmorphism n=" + std::to_string(morphism.source_vars()) +
                    " m=" + std::to_string(morphism.target_vars()) +
                    " D=" + std::to_string(morphism.degree()) + "\n";
  for (unsigned k = 0; k < morphism.source_vars(); ++k)
    out += "x" + std::to_string(k + 1) + " -> " + series_str(morphism.images()[k]) + "\n";
  return out;
}

std::string write_ideal(const std::vector<NCSeries>& generators, unsigned vars,
                        unsigned degree, Format format) {
  if (format == Format::Json) {
    json out;
    out["type"] = "ncideal";
    out["n"] = vars;
    out["D"] = degree;
    json gens = json::array();
    for (const NCSeries& g : generators) gens.push_back(terms_to_json(g.terms(), 0));
    out["generators"] = gens;
    return out.dump() + "\n";
  }
  std::string out =
      "ncideal n=" + std::to_string(vars) + " D=" + std::to_string(degree) + "\n";
  for (const NCSeries& g : generators) out += series_str(g) + "\n";
  return out;
}

std::string write_family(const LocalFunctionFamily& family, unsigned vars,
                         unsigned degree, Format format) {
  if (format == Format::Json) {
    json out;
    out["type"] = "ncfamily";
    out["n"] = vars;
    out["D"] = degree;
    json entries = json::array();
    for (const auto& entry : family.entries) {
      json e;
      e["at"] = point_str(entry.germ.base);
      std::string radii;
      for (size_t k = 0; k < entry.disk.radii.size(); ++k) {
        if (k) radii += ",";
        radii += rational_str(entry.disk.radii[k]);
      }
      e["radius"] = radii;
      e["terms"] = terms_to_json(entry.germ.series.terms(), 0);
      entries.push_back(e);
    }
    out["entries"] = entries;
    return out.dump() + "\n";
  }
  std::string out =
      "ncfamily n=" + std::to_string(vars) + " D=" + std::to_string(degree) + "\n";
  for (const auto& entry : family.entries) {
    std::string radii;
    for (size_t k = 0; k < entry.disk.radii.size(); ++k) {
      if (k) radii += ",";
      radii += rational_str(entry.disk.radii[k]);
    }
    out += "at " + point_str(entry.germ.base) + " radius " + radii + " : " +
           series_str(entry.germ.series) + "\n";
  }
  return out;
}

SeriesFile read_series(const std::string& content) {
  if (looks_like_json(content)) {
    json in = json::parse(content);
    if (in.value("type", "") != "ncseries")
      throw std::invalid_argument("expected an ncseries document");
    unsigned vars = in.at("n").get<unsigned>();
    unsigned degree = in.at("D").get<unsigned>();
    unsigned odd = in.value("r", 0u);
    VarScheme scheme{vars, odd};
    NCSeries series(vars, degree);
    terms_from_json(in.at("terms"), scheme,
                    [&](const Word& w, const Scalar& c) { series.add_term(w, c); });
    return SeriesFile{std::move(series), odd};
  }
  auto lines = nonempty_lines(content);
  if (lines.empty()) throw std::invalid_argument("empty series file");
  auto fields = parse_header(lines[0], "ncseries");
  unsigned vars = field_unsigned(fields, "n", true);
  unsigned degree = field_unsigned(fields, "D", true);
  unsigned odd = field_unsigned(fields, "r", false, 0);
  VarScheme scheme{vars, odd};
  std::string body = lines.size() > 1 ? lines[1] : "0";
  if (lines.size() > 2) throw std::invalid_argument("series file has extra lines");
  return SeriesFile{series_from_body(body, scheme, degree), odd};
}

CommSeries read_comm_series(const std::string& content) {
  if (looks_like_json(content)) {
    json in = json::parse(content);
    if (in.value("type", "") != "commseries")
      throw std::invalid_argument("expected a commseries document");
    unsigned vars = in.at("n").get<unsigned>();
    unsigned degree = in.at("D").get<unsigned>();
    VarScheme scheme{vars, 0};
    CommSeries series(vars, degree);
    terms_from_json(in.at("terms"), scheme, [&](const Word& w, const Scalar& c) {
      series.add_term(w.sorted(), c);
    });
    return series;
  }
  auto lines = nonempty_lines(content);
  if (lines.empty()) throw std::invalid_argument("empty series file");
  auto fields = parse_header(lines[0], "commseries");
  unsigned vars = field_unsigned(fields, "n", true);
  unsigned degree = field_unsigned(fields, "D", true);
  std::string body = lines.size() > 1 ? lines[1] : "0";
  if (lines.size() > 2) throw std::invalid_argument("series file has extra lines");
  return ab(series_from_body(body, VarScheme{vars, 0}, degree));
}

MorphismFile read_morphism(const std::string& content) {
  if (looks_like_json(content)) {
    json in = json::parse(content);
    if (in.value("type", "") != "ncmorphism")
      throw std::invalid_argument("expected an ncmorphism document");
    unsigned n = in.at("n").get<unsigned>();
    unsigned m = in.at("m").get<unsigned>();
    unsigned degree = in.at("D").get<unsigned>();
    VarScheme scheme{m, 0};
    std::vector<NCSeries> images;
    for (const auto& img : in.at("images")) {
      NCSeries series(m, degree);
      terms_from_json(img, scheme,
                      [&](const Word& w, const Scalar& c) { series.add_term(w, c); });
      images.push_back(std::move(series));
    }
    return MorphismFile{NCMorphism(n, m, degree, std::move(images))};
  }
  auto lines = nonempty_lines(content);
  if (lines.empty()) throw std::invalid_argument("empty morphism file");
  auto fields = parse_header(lines[0], "ncmorphism");
  unsigned n = field_unsigned(fields, "n", true);
  unsigned m = field_unsigned(fields, "m", true);
  unsigned degree = field_unsigned(fields, "D", true);
  if (lines.size() != n + 1)
    throw std::invalid_argument("morphism file must list one image per variable");
  std::vector<NCSeries> images(n, NCSeries(m, degree));
  std::vector<bool> seen(n, false);
  for (unsigned k = 1; k <= n; ++k) {
    const std::string& line = lines[k];
    size_t arrow = line.find("->");
    if (arrow == std::string::npos)
      throw std::invalid_argument("morphism line needs 'x<k> -> <series>'");
    std::string lhs = trim(line.substr(0, arrow));
    if (lhs.size() < 2 || lhs[0] != 'x')
      throw std::invalid_argument("morphism line must assign a variable, found '" + lhs + "'");
    unsigned index = static_cast<unsigned>(std::stoul(lhs.substr(1)));
    if (index < 1 || index > n || seen[index - 1])
      throw std::invalid_argument("bad or repeated variable '" + lhs + "'");
    seen[index - 1] = true;
    images[index - 1] = series_from_body(trim(line.substr(arrow + 2)), VarScheme{m, 0}, degree);
  }
  return MorphismFile{NCMorphism(n, m, degree, std::move(images))};
}

IdealFile read_ideal(const std::string& content) {
  if (looks_like_json(content)) {
    json in = json::parse(content);
    if (in.value("type", "") != "ncideal")
      throw std::invalid_argument("expected an ncideal document");
    unsigned vars = in.at("n").get<unsigned>();
    unsigned degree = in.at("D").get<unsigned>();
    VarScheme scheme{vars, 0};
    std::vector<NCSeries> generators;
    for (const auto& g : in.at("generators")) {
      NCSeries series(vars, degree);
      terms_from_json(g, scheme,
                      [&](const Word& w, const Scalar& c) { series.add_term(w, c); });
      generators.push_back(std::move(series));
    }
    return IdealFile{std::move(generators), vars, degree};
  }
  auto lines = nonempty_lines(content);
  if (lines.empty()) throw std::invalid_argument("empty ideal file");
  auto fields = parse_header(lines[0], "ncideal");
  unsigned vars = field_unsigned(fields, "n", true);
  unsigned degree = field_unsigned(fields, "D", true);
  std::vector<NCSeries> generators;
  for (size_t k = 1; k < lines.size(); ++k)
    generators.push_back(series_from_body(lines[k], VarScheme{vars, 0}, degree));
  return IdealFile{std::move(generators), vars, degree};
}

FamilyFile read_family(const std::string& content) {
  auto make_entry = [](const Point& at, std::vector<Rational> radii, NCSeries series) {
    Germ germ(at, std::move(series));
    Polydisk disk(at, std::move(radii));
    return LocalFunctionFamily::Entry{std::move(germ), std::move(disk)};
  };
  if (looks_like_json(content)) {
    json in = json::parse(content);
    if (in.value("type", "") != "ncfamily")
      throw std::invalid_argument("expected an ncfamily document");
    unsigned vars = in.at("n").get<unsigned>();
    unsigned degree = in.at("D").get<unsigned>();
    VarScheme scheme{vars, 0};
    FamilyFile out{{}, vars, degree};
    for (const auto& e : in.at("entries")) {
      Point at = parse_point(e.at("at").get<std::string>());
      std::vector<Rational> radii = parse_radii(e.at("radius").get<std::string>());
      NCSeries series(vars, degree);
      terms_from_json(e.at("terms"), scheme,
                      [&](const Word& w, const Scalar& c) { series.add_term(w, c); });
      out.family.entries.push_back(make_entry(at, std::move(radii), std::move(series)));
    }
    return out;
  }
  auto lines = nonempty_lines(content);
  if (lines.empty()) throw std::invalid_argument("empty family file");
  auto fields = parse_header(lines[0], "ncfamily");
  unsigned vars = field_unsigned(fields, "n", true);
  unsigned degree = field_unsigned(fields, "D", true);
  FamilyFile out{{}, vars, degree};
  for (size_t k = 1; k < lines.size(); ++k) {
    const std::string& line = lines[k];
    if (line.rfind("at ", 0) != 0)
      throw std::invalid_argument("family line must start with 'at'");
    size_t radius_pos = line.find(" radius ");
    size_t colon_pos = line.find(" : ");
    if (radius_pos == std::string::npos || colon_pos == std::string::npos ||
        colon_pos < radius_pos)
      throw std::invalid_argument("family line needs 'at <p> radius <r> : <series>'");
    Point at = parse_point(line.substr(3, radius_pos - 3));
    std::vector<Rational> radii =
        parse_radii(line.substr(radius_pos + 8, colon_pos - radius_pos - 8));
    NCSeries series = series_from_body(line.substr(colon_pos + 3), VarScheme{vars, 0}, degree);
    out.family.entries.push_back(make_entry(at, std::move(radii), std::move(series)));
  }
  return out;
}

}  // namespace ncps
