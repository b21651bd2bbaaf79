#pragma once

// Plain-text instance and packing files. Heights are stored as integers in
// units of the declared denominator; nothing is floating point.
//
// Instance file:
//
//   # two-bar chart instance
//   name example
//   denominator 1000
//   charts 2
//   600 500
//   500 600
//
// Packing file (positions are 1-based start cells):
//
//   # two-bar chart packing
//   name example
//   algorithm a1
//   engine exact
//   denominator 1000
//   charts 2
//   length 3
//   unions 0 1 0
//   order 0 1
//   overlaps 1
//   place 0 600 500 1
//   place 1 500 600 2

#include <iosfwd>
#include <string>

#include "bcpp/model.hpp"

namespace bcpp {

void write_instance(std::ostream& out, const Instance& instance);
std::string format_instance(const Instance& instance);
// Throws InvalidInput on malformed text.
Instance read_instance(std::istream& in);
Instance parse_instance(const std::string& text);

struct PackingFile {
  std::string algorithm;
  std::string engine;
  Instance instance;
  SequencePacking packing;
};

void write_packing(std::ostream& out, const PackingFile& file);
std::string format_packing(const PackingFile& file);
// Rebuilds the instance from the place lines and re-validates the packing;
// throws InvalidInput if the file is malformed, inconsistent or infeasible.
PackingFile read_packing(std::istream& in);
PackingFile parse_packing(const std::string& text);

Instance load_instance_file(const std::string& path);
PackingFile load_packing_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace bcpp
