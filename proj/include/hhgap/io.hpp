#pragma once

#include <string>
#include <vector>

#include "hhgap/presentation.hpp"

namespace hhgap {

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars,
                            const CoeffRing& ring,
                            const std::vector<int>& degrees);

// Declarative algebra file: ring / vars / degrees / relations, plus an
// optional target_relations block describing a further quotient (used by the
// surjection-based subcommands).
struct PresentationFile {
    AlgebraPresentation algebra;
    std::vector<Polynomial> target_relations;
};

PresentationFile parse_presentation_string(const std::string& text);
PresentationFile parse_presentation_file(const std::string& path);

std::string print_presentation(const PresentationFile& pf);

// Module file: `generators = [d1, ...]` (internal degrees) followed by one
// `relation = ["p1", ...]` line per relation column (one entry per
// generator).
struct ModuleFileData {
    std::vector<int> generator_degrees;
    std::vector<std::vector<std::string>> relation_columns;
};
ModuleFileData parse_module_file(const std::string& path);

}  // namespace hhgap
