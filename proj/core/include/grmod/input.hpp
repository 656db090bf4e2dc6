#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grmod/parse.hpp"

namespace grmod {

/* Line-oriented input files:
 *
 *   ring: char=32003, vars=[x,y,z]
 *   ideal twisted_cubic:
 *     x*z - y^2
 *     y*w - z^2
 *   ideal some_curve [genus0]:
 *     ...
 *   forms my_forms:
 *     x + 2*y
 *
 * '#' starts a comment; indented lines belong to the preceding block. A file
 * may contain several ring headers; each one opens a new section (corpus
 * files mix rings of different sizes). All polynomials must be homogeneous;
 * names are unique across the document. */

struct InputIdeal {
    std::string name;
    std::vector<std::string> tags;
    std::vector<Polynomial> gens;
    std::size_t line = 0;
};

struct InputForms {
    std::string name;
    std::vector<Polynomial> forms;
    std::size_t line = 0;
};

struct InputSection {
    Ring ring;
    std::vector<InputIdeal> ideals;
    std::vector<InputForms> forms;
};

struct InputDocument {
    std::vector<InputSection> sections;

    struct Found {
        const InputSection* section = nullptr;
        const InputIdeal* ideal = nullptr;
    };
    std::optional<Found> find_ideal(const std::string& name) const;
    std::vector<std::string> ideal_names() const;
};

/* char_override replaces the characteristic of every ring header */
InputDocument parse_input(const std::string& text,
                          std::optional<std::uint32_t> char_override = std::nullopt);
InputDocument parse_input_file(const std::string& path,
                               std::optional<std::uint32_t> char_override = std::nullopt);

}  // namespace grmod
