#pragma once

#include <string>
#include <vector>

#include "ncps/expr.hpp"
#include "ncps/morphism.hpp"
#include "ncps/recenter.hpp"
#include "ncps/series.hpp"

namespace ncps {

enum class Format { Text, Json };

/// Parses "x1*x2*y1" / "1" back into a word (inverse of word_str).
Word parse_word(const std::string& text, const VarScheme& scheme);

/// Comma-separated scalar coordinates, e.g. "2,3" or "1/2,-1+i".
Point parse_point(const std::string& text);
std::string point_str(const Point& point);

std::vector<Rational> parse_radii(const std::string& text);

struct SeriesFile {
  NCSeries series;
  unsigned odd_vars = 0;
};

struct MorphismFile {
  NCMorphism morphism;
};

struct IdealFile {
  std::vector<NCSeries> generators;
  unsigned vars = 0;
  unsigned degree = 0;
};

struct FamilyFile {
  LocalFunctionFamily family;
  unsigned vars = 0;
  unsigned degree = 0;
};

// Canonical writers. Text headers carry {n, D} plus the optional odd-letter
// count; bodies are canonical expressions, so write/parse round-trips to the
// same bytes.
std::string write_series(const NCSeries& series, unsigned odd_vars, Format format);
std::string write_comm_series(const CommSeries& series, Format format);
std::string write_morphism(const NCMorphism& morphism, Format format);
std::string write_ideal(const std::vector<NCSeries>& generators, unsigned vars,
                        unsigned degree, Format format);
std::string write_family(const LocalFunctionFamily& family, unsigned vars,
                         unsigned degree, Format format);

// Readers auto-detect text vs JSON.
SeriesFile read_series(const std::string& content);
CommSeries read_comm_series(const std::string& content);
MorphismFile read_morphism(const std::string& content);
IdealFile read_ideal(const std::string& content);
FamilyFile read_family(const std::string& content);

}  // namespace ncps
