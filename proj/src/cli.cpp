#include "ncps/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ncps/geometry.hpp"
#include "ncps/ideal.hpp"
#include "ncps/io.hpp"
#include "ncps/morphism.hpp"
#include "ncps/recenter.hpp"

namespace ncps::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path, std::istream& fallback) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << fallback.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << payload;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::invalid_argument("cannot write '" + out_path + "'");
  file << payload;
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + name + "'");
}

json certificate_json(const IdealCertificate& cert) {
  json arr = json::array();
  for (const auto& [generator, env] : cert.parts())
    for (const auto& [key, c] : env.terms()) {
      json item;
      item["gen"] = generator;
      item["u"] = word_str(key.first);
      item["v"] = word_str(key.second);
      item["c"] = scalar_str(c);
      arr.push_back(item);
    }
  return arr;
}

std::string certificate_text(const IdealCertificate& cert) {
  std::string out;
  for (const auto& [generator, env] : cert.parts())
    for (const auto& [key, c] : env.terms())
      out += "g" + std::to_string(generator) + " u=" + word_str(key.first) +
             " v=" + word_str(key.second) + " c=" + scalar_str(c) + "\n";
  return out;
}

struct Options {
  std::string out_path = "-";
  std::string format_name = "text";
  Format format() const { return parse_format(format_name); }
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--out", opt.out_path, "output file ('-' for stdout)");
  cmd->add_option("--format", opt.format_name, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"degree-truncated noncommutative power series kernel"};
  app.require_subcommand(1);
  int result = 0;
  Options opt;

  // ---- parse ----------------------------------------------------------
  struct {
    unsigned n = 0, r = 0, degree = 0;
    std::string expr;
  } parse_args;
  {
    auto* cmd = app.add_subcommand("parse", "parse an expression into a canonical series");
    cmd->add_option("--n", parse_args.n, "total variable count")->required();
    cmd->add_option("--r", parse_args.r, "trailing odd (y) variable count");
    cmd->add_option("--D", parse_args.degree, "truncation degree")->required();
    cmd->add_option("expr", parse_args.expr, "expression")->required();
    add_common(cmd, opt);
    cmd->callback([&] {
      VarScheme scheme{parse_args.n, parse_args.r};
      auto eval = parse_series(parse_args.expr, scheme, parse_args.degree);
      if (eval.truncated)
        err << "notice: expansion exceeded degree " << parse_args.degree
            << ", result truncated\n";
      emit(write_series(eval.series, parse_args.r, opt.format()), opt.out_path, out);
    });
  }

  // ---- mul / add ------------------------------------------------------
  struct {
    std::string lhs, rhs;
  } binary_args;
  for (const char* name : {"mul", "add"}) {
    auto* cmd = app.add_subcommand(name, std::string(name) + " two series files");
    cmd->add_option("lhs", binary_args.lhs, "left series file")->required();
    cmd->add_option("rhs", binary_args.rhs, "right series file")->required();
    add_common(cmd, opt);
    std::string op = name;
    cmd->callback([&, op] {
      SeriesFile lhs = read_series(read_file(binary_args.lhs, std::cin));
      SeriesFile rhs = read_series(read_file(binary_args.rhs, std::cin));
      NCSeries value = op == "mul" ? lhs.series * rhs.series : lhs.series + rhs.series;
      emit(write_series(value, lhs.odd_vars, opt.format()), opt.out_path, out);
    });
  }

  // ---- ab / unab ------------------------------------------------------
  struct {
    std::string input;
  } unary_args;
  {
    auto* cmd = app.add_subcommand("ab", "abelianize a series");
    cmd->add_option("series", unary_args.input, "series file")->required();
    add_common(cmd, opt);
    cmd->callback([&] {
      SeriesFile f = read_series(read_file(unary_args.input, std::cin));
      emit(write_comm_series(ab(f.series), opt.format()), opt.out_path, out);
    });
  }
  {
    auto* cmd = app.add_subcommand("unab", "commlike lift of a commutative series");
    cmd->add_option("series", unary_args.input, "commutative series file")->required();
    add_common(cmd, opt);
    cmd->callback([&] {
      CommSeries g = read_comm_series(read_file(unary_args.input, std::cin));
      emit(write_series(unab(g), 0, opt.format()), opt.out_path, out);
    });
  }

  // ---- compose / invert-morphism --------------------------------------
  struct {
    std::string first, second;
  } compose_args;
  {
    auto* cmd = app.add_subcommand("compose", "compose morphism files (apply first, then second)");
    cmd->add_option("first", compose_args.first, "morphism applied first")->required();
    cmd->add_option("second", compose_args.second, "morphism applied second")->required();
    add_common(cmd, opt);
    cmd->callback([&] {
      MorphismFile f = read_morphism(read_file(compose_args.first, std::cin));
      MorphismFile g = read_morphism(read_file(compose_args.second, std::cin));
      emit(write_morphism(compose(f.morphism, g.morphism), opt.format()), opt.out_path, out);
    });
  }
  struct {
    std::string input;
    unsigned degree = 0;
    bool has_degree = false;
  } invert_args;
  {
    auto* cmd = app.add_subcommand("invert-morphism", "inverse automorphism, degree by degree");
    cmd->add_option("morphism", invert_args.input, "morphism file")->required();
    auto* deg = cmd->add_option("--D", invert_args.degree, "truncation degree of the inverse");
    add_common(cmd, opt);
    cmd->callback([&, deg] {
      MorphismFile f = read_morphism(read_file(invert_args.input, std::cin));
      unsigned degree = deg->count() ? invert_args.degree : f.morphism.degree();
      emit(write_morphism(invert_morphism(f.morphism, degree), opt.format()),
           opt.out_path, out);
    });
  }
  {
    auto* cmd = app.add_subcommand("invert-unit", "multiplicative inverse of a unit series");
    cmd->add_option("series", invert_args.input, "series file")->required();
    auto* deg = cmd->add_option("--D", invert_args.degree, "truncation degree of the inverse");
    add_common(cmd, opt);
    cmd->callback([&, deg] {
      SeriesFile f = read_series(read_file(invert_args.input, std::cin));
      unsigned degree = deg->count() ? invert_args.degree : f.series.degree();
      emit(write_series(invert_unit(f.series, degree), f.odd_vars, opt.format()),
           opt.out_path, out);
    });
  }

  // ---- recenter / eval -------------------------------------------------
  struct {
    std::string input, from, to, at;
    unsigned degree = 0;
  } germ_args;
  {
    auto* cmd = app.add_subcommand("recenter", "re-expand a germ around a new center");
    cmd->add_option("series", germ_args.input, "series file (germ at --from)")->required();
    cmd->add_option("--from", germ_args.from, "current center (default origin)");
    cmd->add_option("--to", germ_args.to, "new center")->required();
    auto* deg = cmd->add_option("--D", germ_args.degree, "truncation degree of the result");
    add_common(cmd, opt);
    cmd->callback([&, deg] {
      SeriesFile f = read_series(read_file(germ_args.input, std::cin));
      Point from = germ_args.from.empty()
                       ? Point(std::vector<Scalar>(f.series.vars()))
                       : parse_point(germ_args.from);
      Point to = parse_point(germ_args.to);
      unsigned degree = deg->count() ? germ_args.degree : f.series.degree();
      Germ moved = recenter(Germ(from, f.series), to, degree);
      emit(write_series(moved.series, f.odd_vars, opt.format()), opt.out_path, out);
    });
  }
  {
    auto* cmd = app.add_subcommand("eval", "evaluate the abelianized germ at a point");
    cmd->add_option("series", germ_args.input, "series file (germ at --from)")->required();
    cmd->add_option("--from", germ_args.from, "center (default origin)");
    cmd->add_option("--at", germ_args.at, "evaluation point")->required();
    add_common(cmd, opt);
    cmd->callback([&] {
      SeriesFile f = read_series(read_file(germ_args.input, std::cin));
      Point from = germ_args.from.empty()
                       ? Point(std::vector<Scalar>(f.series.vars()))
                       : parse_point(germ_args.from);
      Scalar value = evaluate(Germ(from, f.series), parse_point(germ_args.at));
      if (opt.format() == Format::Json) {
        json res;
        res["value"] = scalar_str(value);
        emit(res.dump() + "\n", opt.out_path, out);
      } else {
        emit(scalar_str(value) + "\n", opt.out_path, out);
      }
    });
  }

  // ---- ideals ----------------------------------------------------------
  struct {
    std::string ideal, series, certificate;
  } ideal_args;
  {
    auto* cmd = app.add_subcommand("ideal-basis", "echelon basis of a completed ideal");
    cmd->add_option("ideal", ideal_args.ideal, "ideal file")->required();
    add_common(cmd, opt);
    cmd->callback([&] {
      IdealFile file = read_ideal(read_file(ideal_args.ideal, std::cin));
      CompletedIdealBasis basis(file.generators, file.vars, file.degree);
      if (opt.format() == Format::Json) {
        json res;
        res["dimension"] = basis.dimension();
        json rows = json::array();
        for (const auto& element : basis.elements())
          rows.push_back(json::array({word_str(element.pivot),
                                      series_str(element.series)}));
        res["basis"] = rows;
        emit(res.dump() + "\n", opt.out_path, out);
      } else {
        std::string text = "dimension " + std::to_string(basis.dimension()) + "\n";
        for (const auto& element : basis.elements())
          text += "pivot " + word_str(element.pivot) + " : " +
                  series_str(element.series) + "\n";
        emit(text, opt.out_path, out);
      }
    });
  }
  {
    auto* cmd = app.add_subcommand("member", "membership in a completed ideal");
    cmd->add_option("series", ideal_args.series, "series file")->required();
    cmd->add_option("--ideal", ideal_args.ideal, "ideal file")->required();
    cmd->add_option("--certificate", ideal_args.certificate,
                    "where to write the certificate (default stdout)");
    add_common(cmd, opt);
    cmd->callback([&] {
      IdealFile file = read_ideal(read_file(ideal_args.ideal, std::cin));
      SeriesFile f = read_series(read_file(ideal_args.series, std::cin));
      CompletedIdealBasis basis(file.generators, file.vars, file.degree);
      auto reduction = basis.reduce(f.series);
      bool member = reduction.remainder.is_zero();
      if (opt.format() == Format::Json) {
        json res;
        res["member"] = member;
        if (member) res["certificate"] = certificate_json(reduction.certificate);
        else res["remainder"] = series_str(reduction.remainder);
        emit(res.dump() + "\n", opt.out_path, out);
      } else {
        emit(member ? "member: yes\n" : "member: no\n", opt.out_path, out);
        if (member) {
          std::string cert = certificate_text(reduction.certificate);
          if (!ideal_args.certificate.empty())
            emit(cert, ideal_args.certificate, out);
          else
            out << cert;
        }
      }
      if (!member) result = 1;
    });
  }
  {
    auto* cmd = app.add_subcommand("normal-form", "canonical representative modulo an ideal");
    cmd->add_option("series", ideal_args.series, "series file")->required();
    cmd->add_option("--ideal", ideal_args.ideal, "ideal file")->required();
    add_common(cmd, opt);
    cmd->callback([&] {
      IdealFile file = read_ideal(read_file(ideal_args.ideal, std::cin));
      SeriesFile f = read_series(read_file(ideal_args.series, std::cin));
      CompletedIdealBasis basis(file.generators, file.vars, file.degree);
      emit(write_series(basis.normal_form(f.series), f.odd_vars, opt.format()),
           opt.out_path, out);
    });
  }
  {
    auto* cmd = app.add_subcommand("commutator-reduce",
                                   "split off the commlike shadow with a certificate");
    cmd->add_option("series", ideal_args.series, "series file")->required();
    add_common(cmd, opt);
    cmd->callback([&] {
      SeriesFile f = read_series(read_file(ideal_args.series, std::cin));
      CommutatorReduction reduction = commutator_reduce(f.series);
      if (opt.format() == Format::Json) {
        json res;
        res["commlike"] = json::parse(write_series(reduction.commlike, f.odd_vars, Format::Json));
        json cert = json::array();
        for (const auto& [pair, env] : reduction.certificate)
          for (const auto& [key, c] : env.terms()) {
            json item;
            item["i"] = pair.first;
            item["j"] = pair.second;
            item["u"] = word_str(key.first);
            item["v"] = word_str(key.second);
            item["c"] = scalar_str(c);
            cert.push_back(item);
          }
        res["certificate"] = cert;
        emit(res.dump() + "\n", opt.out_path, out);
      } else {
        std::string text = write_series(reduction.commlike, f.odd_vars, Format::Text);
        for (const auto& [pair, env] : reduction.certificate)
          for (const auto& [key, c] : env.terms())
            text += "[x" + std::to_string(pair.first) + ",x" + std::to_string(pair.second) +
                    "] u=" + word_str(key.first) + " v=" + word_str(key.second) +
                    " c=" + scalar_str(c) + "\n";
        emit(text, opt.out_path, out);
      }
    });
  }

  // ---- geometry --------------------------------------------------------
  struct {
    unsigned n = 0, r = 0, degree = 0;
    std::vector<unsigned> charts;
    std::string at;
  } geo_args;
  {
    auto* cmd = app.add_subcommand("super-basis",
                                   "normal-form basis of the supermanifold relation ideal");
    cmd->add_option("--n", geo_args.n, "even variable count")->required();
    cmd->add_option("--r", geo_args.r, "odd variable count")->required();
    cmd->add_option("--D", geo_args.degree, "truncation degree")->required();
    add_common(cmd, opt);
    cmd->callback([&] {
      CompletedIdealBasis basis = super_relation_ideal(geo_args.n, geo_args.r, geo_args.degree);
      std::vector<Word> normal_words;
      for (const Word& word : words_up_to(geo_args.n + geo_args.r, geo_args.degree)) {
        bool pivot = false;
        for (const auto& element : basis.elements())
          if (element.pivot == word) {
            pivot = true;
            break;
          }
        if (!pivot) normal_words.push_back(word);
      }
      if (opt.format() == Format::Json) {
        json res;
        res["n"] = geo_args.n;
        res["r"] = geo_args.r;
        res["D"] = geo_args.degree;
        res["ideal_dimension"] = basis.dimension();
        res["dimension"] = normal_words.size();
        json words = json::array();
        for (const Word& word : normal_words) words.push_back(word_str(word, geo_args.n));
        res["basis"] = words;
        emit(res.dump() + "\n", opt.out_path, out);
      } else {
        std::string text = "superbasis n=" + std::to_string(geo_args.n) +
                           " r=" + std::to_string(geo_args.r) +
                           " D=" + std::to_string(geo_args.degree) + "\n";
        text += "ideal-dimension " + std::to_string(basis.dimension()) + "\n";
        text += "dimension " + std::to_string(normal_words.size()) + "\n";
        for (const Word& word : normal_words) text += word_str(word, geo_args.n) + "\n";
        emit(text, opt.out_path, out);
      }
    });
  }
  {
    auto* cmd = app.add_subcommand("cp-transition",
                                   "chart transition germ of NC projective space");
    cmd->add_option("--n", geo_args.n, "projective dimension")->required();
    cmd->add_option("--charts", geo_args.charts, "chart pair i j")->expected(2)->required();
    cmd->add_option("--at", geo_args.at, "base point in chart i coordinates")->required();
    cmd->add_option("--D", geo_args.degree, "truncation degree")->required();
    add_common(cmd, opt);
    cmd->callback([&] {
      TransitionGerm germ = projective_transition(geo_args.n, geo_args.charts[0],
                                                  geo_args.charts[1],
                                                  parse_point(geo_args.at), geo_args.degree);
      if (opt.format() == Format::Json) {
        json res;
        res["type"] = "nctransition";
        res["n"] = geo_args.n;
        res["from"] = germ.chart_from;
        res["to"] = germ.chart_to;
        res["at"] = point_str(germ.at);
        res["image"] = point_str(germ.image);
        res["map"] = json::parse(write_morphism(germ.map, Format::Json));
        emit(res.dump() + "\n", opt.out_path, out);
      } else {
        std::string text = "nctransition n=" + std::to_string(geo_args.n) +
                           " from=" + std::to_string(germ.chart_from) +
                           " to=" + std::to_string(germ.chart_to) +
                           " D=" + std::to_string(geo_args.degree) + "\n";
        text += "at " + point_str(germ.at) + "\n";
        text += "image " + point_str(germ.image) + "\n";
        text += write_morphism(germ.map, Format::Text);
        emit(text, opt.out_path, out);
      }
    });
  }
  {
    auto* cmd = app.add_subcommand("check-cocycle",
                                   "verify chart compatibility of NC projective space");
    cmd->add_option("--n", geo_args.n, "projective dimension")->required();
    cmd->add_option("--charts", geo_args.charts, "chart triple i j k (default 0 1 2)")
        ->expected(3);
    cmd->add_option("--at", geo_args.at, "base point in chart i coordinates")->required();
    cmd->add_option("--D", geo_args.degree, "truncation degree")->required();
    add_common(cmd, opt);
    cmd->callback([&] {
      std::array<unsigned, 3> charts = {0, 1, 2};
      if (geo_args.charts.size() == 3)
        charts = {geo_args.charts[0], geo_args.charts[1], geo_args.charts[2]};
      CocycleReport report =
          check_cocycle(geo_args.n, charts, parse_point(geo_args.at), geo_args.degree);
      if (opt.format() == Format::Json) {
        json res;
        res["ok"] = report.ok;
        res["agree_degree"] = report.agree_degree;
        res["points_match"] = report.points_match;
        emit(res.dump() + "\n", opt.out_path, out);
      } else {
        std::string text = report.ok ? "cocycle: ok\n" : "cocycle: FAIL\n";
        text += "agrees to degree " + std::to_string(report.agree_degree) + "\n";
        emit(text, opt.out_path, out);
      }
      if (!report.ok) result = 1;
    });
  }
  {
    auto* cmd = app.add_subcommand("family-check",
                                   "verify the section condition on a germ family");
    cmd->add_option("family", germ_args.input, "family file")->required();
    auto* deg = cmd->add_option("--D", germ_args.degree, "comparison degree");
    add_common(cmd, opt);
    cmd->callback([&, deg] {
      FamilyFile file = read_family(read_file(germ_args.input, std::cin));
      unsigned degree = deg->count() ? germ_args.degree : file.degree;
      auto violation = check_family_consistency(file.family, degree);
      if (opt.format() == Format::Json) {
        json res;
        res["consistent"] = !violation.has_value();
        if (violation) {
          json v;
          v["from"] = violation->from;
          v["to"] = violation->to;
          v["word"] = word_str(violation->word);
          v["expected"] = scalar_str(violation->expected);
          v["found"] = scalar_str(violation->found);
          res["violation"] = v;
        }
        emit(res.dump() + "\n", opt.out_path, out);
      } else if (violation) {
        emit("inconsistent: germ " + std::to_string(violation->from) + " -> germ " +
                 std::to_string(violation->to) + " at word " + word_str(violation->word) +
                 ": expected " + scalar_str(violation->expected) + ", found " +
                 scalar_str(violation->found) + "\n",
             opt.out_path, out);
      } else {
        emit("consistent\n", opt.out_path, out);
      }
      if (violation) result = 1;
    });
  }

  // CLI11 wants argv-style input, reversed
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return result;
}

}  // namespace ncps::cli
