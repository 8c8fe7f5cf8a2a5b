#pragma once

#include <string>

#include "ccst/process.hpp"

namespace ccst {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)),
        line(line),
        col(col) {}
  int line, col;
};

struct Model {
  Definitions defs;
  ProcessPtr root;  // the `main = ...` process
};

// Parses a .ccst model: `signals a,b;` header, `X = P;` definitions and a
// mandatory `main = P;` entry.  See docs/ccst-format.md for the grammar.
Model parse_model(const std::string& source);

// Parses a single process expression (no definitions).
ProcessPtr parse_process(const std::string& source);

std::string print_model(const Model& m);

}  // namespace ccst
