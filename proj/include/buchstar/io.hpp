/**
 * Complex files: a UTF-8 JSON document
 *
 *   {
 *     "name": "octahedron",
 *     "facets": [[1, 3, 5], [1, 3, 6], ...],
 *     "coloring": {"1": 1, "2": 1, ...},
 *     "metadata": {...}
 *   }
 *
 * Vertex labels are non-negative integers or strings.  Coloring keys are the
 * vertex labels rendered as text.  Only "facets" is required.  Emitted files
 * list facets and coloring entries in canonical vertex order.
 */
#ifndef BUCHSTAR_IO_HPP
#define BUCHSTAR_IO_HPP

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "classify.hpp"
#include "complex.hpp"
#include "error.hpp"

namespace buchstar {

struct ComplexFile
{
    std::optional<std::string> name;
    Complex complex;
    std::optional<Coloring> coloring;
    nlohmann::json metadata = nlohmann::json::object();
};

namespace detail {

inline std::string position_of(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    {
        if (text[i] == '\n')
        {
            ++line;
            col = 1;
        }
        else
            ++col;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Vertex vertex_from_json(const nlohmann::json& j, std::size_t facet_index)
{
    if (j.is_number_unsigned())
        return Vertex(static_cast<std::int64_t>(j.get<std::uint64_t>()));
    if (j.is_number_integer())
        throw ValidationError("facet " + std::to_string(facet_index) + ": negative vertex label " + j.dump());
    if (j.is_string())
        return Vertex(j.get<std::string>());
    throw ValidationError("facet " + std::to_string(facet_index) + ": vertex labels must be non-negative integers or "
                          "strings, got " + j.dump());
}

inline nlohmann::json vertex_to_json(const Vertex& v)
{
    if (v.is_integer())
        return v.integer();
    return v.name();
}

}   // namespace detail

inline ComplexFile parse_complex_text(const std::string& text)
{
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw ParseError(detail::position_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
    }
    if (!doc.is_object())
        throw ParseError("top level must be an object");
    if (!doc.contains("facets") || !doc["facets"].is_array())
        throw ParseError("missing \"facets\" array");

    ComplexFile out;
    if (doc.contains("name"))
    {
        if (!doc["name"].is_string())
            throw ParseError("\"name\" must be a string");
        out.name = doc["name"].get<std::string>();
    }
    if (doc.contains("metadata"))
    {
        if (!doc["metadata"].is_object())
            throw ParseError("\"metadata\" must be an object");
        out.metadata = doc["metadata"];
    }

    std::vector<std::vector<Vertex>> facets;
    const auto& jf = doc["facets"];
    for (std::size_t i = 0; i < jf.size(); ++i)
    {
        if (!jf[i].is_array())
            throw ValidationError("facet " + std::to_string(i) + " is not a list");
        std::vector<Vertex> vs;
        for (const auto& x : jf[i])
            vs.push_back(detail::vertex_from_json(x, i));
        facets.push_back(std::move(vs));
    }
    try
    {
        out.complex = Complex::build(facets);
    }
    catch (const MalformedFaceError& e)
    {
        throw ValidationError(std::string("facet validation: ") + e.what());
    }

    if (doc.contains("coloring"))
    {
        const auto& jc = doc["coloring"];
        if (!jc.is_object())
            throw ParseError("\"coloring\" must be an object mapping vertex labels to colors");
        std::map<std::string, Vertex> by_text;
        for (const auto& v : out.complex.vertices())
            if (!by_text.emplace(v.to_string(), v).second)
                throw ValidationError("coloring: label " + v.to_string() + " is ambiguous (integer and string)");
        std::map<Vertex, int> assignment;
        for (auto it = jc.begin(); it != jc.end(); ++it)
        {
            auto found = by_text.find(it.key());
            if (found == by_text.end())
                throw ValidationError("coloring: vertex " + it.key() + " is not in the complex");
            if (!it.value().is_number_integer() || it.value().get<std::int64_t>() < 1)
                throw ValidationError("coloring: color of vertex " + it.key() + " must be a positive integer");
            assignment[found->second] = static_cast<int>(it.value().get<std::int64_t>());
        }
        const int d = out.complex.is_void() ? 0 : out.complex.dim() + 1;
        Coloring coloring(d, std::move(assignment));
        validate_coloring(out.complex, coloring);
        out.coloring = std::move(coloring);
    }
    return out;
}

inline std::string emit_complex_text(const ComplexFile& file)
{
    std::ostringstream os;
    os << "{\n";
    if (file.name)
        os << "  \"name\": " << nlohmann::json(*file.name).dump() << ",\n";
    os << "  \"facets\": [";
    const auto& facets = file.complex.facets();
    for (std::size_t i = 0; i < facets.size(); ++i)
    {
        os << (i ? ",\n    " : "\n    ") << "[";
        for (std::size_t j = 0; j < facets[i].size(); ++j)
            os << (j ? ", " : "") << detail::vertex_to_json(facets[i][j]).dump();
        os << "]";
    }
    os << (facets.empty() ? "]" : "\n  ]");
    if (file.coloring)
    {
        os << ",\n  \"coloring\": {";
        bool first = true;
        for (const auto& v : file.complex.vertices())
        {
            os << (first ? "" : ", ") << nlohmann::json(v.to_string()).dump() << ": " << file.coloring->color(v);
            first = false;
        }
        os << "}";
    }
    if (!file.metadata.empty())
        os << ",\n  \"metadata\": " << file.metadata.dump();
    os << "\n}\n";
    return os.str();
}

inline ComplexFile read_complex_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try
    {
        return parse_complex_text(ss.str());
    }
    catch (const ParseError& e)
    {
        throw ParseError(path + ": " + e.what());
    }
}

inline void write_complex_file(const std::string& path, const ComplexFile& file)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    out << emit_complex_text(file);
}

}   // namespace buchstar

#endif
