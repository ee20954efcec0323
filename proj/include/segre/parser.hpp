#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "segre/hypersurface.hpp"
#include "segre/maps.hpp"
#include "segre/series.hpp"

namespace segre {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) +
                             ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line, col;
};

struct HypersurfaceDecl {
    std::string name;
    NormalHypersurface m;
    /// Present when the declaration used `imw = ...` (the complexification
    /// of that real defining function is what `m` holds).
    std::optional<RealDefiningFunction> imw;
};

struct MapDecl {
    std::string name;
    SegreMap h;
};

struct Expectation {
    std::string key;    // dotted identifier, e.g. "source.finite_type"
    std::string value;  // raw text up to the terminating ';'
    int line = 0;
};

struct ParsedFile {
    int order = 10;
    std::vector<HypersurfaceDecl> hypersurfaces;
    std::vector<MapDecl> maps;
    std::vector<Expectation> expectations;
};

/// Parses a corpus/input file: `order N;` directive, `hypersurface <name>
/// { n = <int>; Q = <expr>; }` (or `imw = <expr>` in variables z, chi, s),
/// `map <name> { n = <int>; f1 = ...; g = ...; ft1 = ...; gt = ...; }`, and
/// `expect <key> = <raw value>;`.  When overrideOrder is given it wins over
/// the file's `order` directive.  Errors carry line and column.
ParsedFile parseFile(const std::string& text,
                     std::optional<int> overrideOrder = std::nullopt);

/// Parses a single expression over the given space at the given truncation
/// order.  Grammar: integers, `i`, variables, + - * / ^ (integer powers),
/// exp/sin/cos/log1p, parentheses; `/` requires a unit denominator.
Series parseExpression(const std::string& text, const VarSpace& space,
                       int order);

/// Parsed with `s` (the placeholder for Re w) allowed and w/tau forbidden.
Series parseImwExpression(const std::string& text, const VarSpace& space,
                          int order);

}  // namespace segre
