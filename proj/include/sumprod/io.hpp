#pragma once

#include <string>
#include <utility>
#include <vector>

#include <sumprod/dist.hpp>

namespace sumprod {

/* Dist TSV format (bit-exact round trip):
     #field p=5            or  #field Q
     <scalar-text>\t<num>/<den>
   one atom per line, atoms in canonical order, masses always num/den. */
std::string dist_to_tsv(const Dist& d);
Dist dist_from_tsv(std::string_view text);

/// Scalar sets: same header, one scalar text per line.
std::string set_to_tsv(const FieldSpec& f, const std::vector<Scalar>& elems);
std::pair<FieldSpec, std::vector<Scalar>> set_from_tsv(std::string_view text);

/// Tab-separated scalar tuples with the same field header (points, planes).
std::pair<FieldSpec, std::vector<std::vector<Scalar>>>
tuples_from_tsv(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

Dist load_dist(const std::string& path);
void save_dist(const Dist& d, const std::string& path);

} // namespace sumprod
