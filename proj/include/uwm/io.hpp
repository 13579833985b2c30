#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "uwm/codes.hpp"
#include "uwm/verdict.hpp"
#include "uwm/wmatrix.hpp"

namespace uwm {

// Malformed input files. Distinct from invalid_argument so the CLI can map
// it to the usage/parse exit code.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Single matrix: "uwm n=<n> p=<p> m=<m>" then n lines of n tokens,
// "." for zero or an exponent k in [0, m). Serialization is canonical
// (single spaces, trailing newline): parse(serialize(w)) == w always, and
// serialize(parse(text)) == text for canonical files.
std::string serialize_matrix(const UnitWeighingMatrix& w);
UnitWeighingMatrix parse_matrix(const std::string& text);

// Matrix set: "uwmset n=<n> p=<p> m=<m> count=<k>" then k blank-line
// separated blocks in the single-matrix body format.
std::string serialize_set(const MUWSet& set);
MUWSet parse_set(const std::string& text);

// Either format; a single matrix yields a one-element vector.
std::vector<UnitWeighingMatrix> parse_matrices(const std::string& text);

// Sign-matrix family: "hexfam n=<order> count=<count> c=<c>" then blank-line
// separated blocks of <order> rows of <order>/4 hex digits.
std::string serialize_hex_family(const SignMatrixFamily& family);
SignMatrixFamily parse_hex_family(const std::string& text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

std::string sha256_hex(const std::string& data);

// Manifest lines: "<sha256>  <filename>".
std::string make_manifest(const std::vector<std::pair<std::string, std::string>>& name_content);
Verdict verify_manifest(const std::filesystem::path& dir,
                        const std::string& manifest_name = "MANIFEST.txt");

// Bundled data directory: UWM_DATA_DIR environment override, else the
// compiled-in location.
std::filesystem::path default_data_dir();

}  // namespace uwm
