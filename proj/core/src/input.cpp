#include "grmod/input.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "grmod/errors.hpp"

namespace grmod {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

bool is_indented(const std::string& s) {
    return !s.empty() && std::isspace(static_cast<unsigned char>(s[0]));
}

/* "char=32003, vars=[x,y,z]" */
Ring parse_ring_header(const std::string& body, std::size_t line,
                       std::optional<std::uint32_t> char_override) {
    std::uint32_t characteristic = 32003;
    std::vector<std::string> vars;
    bool saw_vars = false;

    std::string text = body;
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) -> void { throw parse_error(msg, line, pos); };
    while (pos < text.size()) {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
        if (pos >= text.size())
            break;
        std::size_t eq = text.find('=', pos);
        if (eq == std::string::npos)
            fail("expected key=value in ring header");
        std::string key = strip(text.substr(pos, eq - pos));
        pos = eq + 1;
        if (key == "char") {
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
                ++end;
            if (end == pos)
                fail("expected integer after char=");
            characteristic = static_cast<std::uint32_t>(std::stoul(text.substr(pos, end - pos)));
            pos = end;
        } else if (key == "vars") {
            if (pos >= text.size() || text[pos] != '[')
                fail("expected [ after vars=");
            std::size_t close = text.find(']', pos);
            if (close == std::string::npos)
                fail("unterminated variable list");
            std::string list = text.substr(pos + 1, close - pos - 1);
            std::stringstream ss(list);
            std::string item;
            while (std::getline(ss, item, ',')) {
                item = strip(item);
                if (!item.empty())
                    vars.push_back(item);
            }
            saw_vars = true;
            pos = close + 1;
        } else {
            fail("unknown ring header key '" + key + "'");
        }
    }
    if (!saw_vars)
        fail("ring header without vars=[...]");
    if (char_override)
        characteristic = *char_override;
    try {
        return Ring(PrimeField(characteristic), vars);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), line, 0);
    }
}

/* "name" or "name [tag1,tag2]" */
void parse_block_name(const std::string& body, std::size_t line, std::string& name,
                      std::vector<std::string>& tags) {
    std::string text = strip(body);
    std::size_t br = text.find('[');
    if (br == std::string::npos) {
        name = strip(text);
    } else {
        name = strip(text.substr(0, br));
        std::size_t close = text.find(']', br);
        if (close == std::string::npos)
            throw parse_error("unterminated tag list", line, br);
        std::stringstream ss(text.substr(br + 1, close - br - 1));
        std::string item;
        while (std::getline(ss, item, ','))
            if (!strip(item).empty())
                tags.push_back(strip(item));
    }
    if (name.empty())
        throw parse_error("missing block name", line, 0);
}

}  // namespace

std::optional<InputDocument::Found> InputDocument::find_ideal(const std::string& name) const {
    for (const InputSection& s : sections)
        for (const InputIdeal& i : s.ideals)
            if (i.name == name)
                return Found{&s, &i};
    return std::nullopt;
}

std::vector<std::string> InputDocument::ideal_names() const {
    std::vector<std::string> names;
    for (const InputSection& s : sections)
        for (const InputIdeal& i : s.ideals)
            names.push_back(i.name);
    return names;
}

InputDocument parse_input(const std::string& text, std::optional<std::uint32_t> char_override) {
    InputDocument doc;
    std::set<std::string> names;

    enum class Block { none, ideal, forms };
    Block block = Block::none;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string no_comment = raw.substr(0, raw.find('#'));
        std::string line = strip(no_comment);
        if (line.empty())
            continue;

        if (!is_indented(no_comment)) {
            block = Block::none;
            if (line.rfind("ring:", 0) == 0) {
                doc.sections.push_back(
                    InputSection{parse_ring_header(line.substr(5), lineno, char_override), {}, {}});
                continue;
            }
            if (doc.sections.empty())
                throw parse_error("content before the first ring header", lineno, 0);
            if (line.rfind("ideal", 0) == 0 && line.back() == ':') {
                std::string body = line.substr(5, line.size() - 6);
                InputIdeal ideal;
                ideal.line = lineno;
                parse_block_name(body, lineno, ideal.name, ideal.tags);
                if (!names.insert(ideal.name).second)
                    throw parse_error("duplicate name '" + ideal.name + "'", lineno, 0);
                doc.sections.back().ideals.push_back(std::move(ideal));
                block = Block::ideal;
                continue;
            }
            if (line.rfind("forms", 0) == 0 && line.back() == ':') {
                std::string body = line.substr(5, line.size() - 6);
                InputForms forms;
                forms.line = lineno;
                std::vector<std::string> tags;
                parse_block_name(body, lineno, forms.name, tags);
                if (!names.insert(forms.name).second)
                    throw parse_error("duplicate name '" + forms.name + "'", lineno, 0);
                doc.sections.back().forms.push_back(std::move(forms));
                block = Block::forms;
                continue;
            }
            throw parse_error("unrecognized directive: " + line, lineno, 0);
        }

        /* indented: a polynomial belonging to the open block */
        if (doc.sections.empty() || block == Block::none)
            throw parse_error("indented line outside an ideal or forms block", lineno, 0);
        const Ring& ring = doc.sections.back().ring;
        Polynomial f = parse_polynomial(line, ring, lineno);
        if (!f.is_homogeneous())
            throw parse_error("polynomial is not homogeneous", lineno, 0);
        if (block == Block::ideal)
            doc.sections.back().ideals.back().gens.push_back(std::move(f));
        else
            doc.sections.back().forms.back().forms.push_back(std::move(f));
    }
    return doc;
}

InputDocument parse_input_file(const std::string& path, std::optional<std::uint32_t> char_override) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open input file: " + path, 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_input(ss.str(), char_override);
}

}  // namespace grmod
