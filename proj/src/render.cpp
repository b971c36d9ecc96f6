#include "riordan/render.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace riordan {

Format parse_format(std::string_view name)
{
    if (name == "table")
        return Format::Table;
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    throw Error(ErrorKind::ParseError, "unknown format '" + std::string(name) + "'");
}

std::string render(const Rows& rows, Format format)
{
    std::ostringstream os;
    switch (format) {
    case Format::Json: {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& v : row)
                r.push_back(v.to_string());
            j.push_back(std::move(r));
        }
        os << j.dump();
        break;
    }
    case Format::Csv:
        for (std::size_t n = 0; n < rows.size(); ++n) {
            if (n > 0)
                os << '\n';
            for (std::size_t k = 0; k < rows[n].size(); ++k)
                os << (k > 0 ? "," : "") << rows[n][k];
        }
        break;
    case Format::Table: {
        std::vector<std::size_t> width;
        for (const auto& row : rows)
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (width.size() <= k)
                    width.push_back(0);
                width[k] = std::max(width[k], row[k].to_string().size());
            }
        for (std::size_t n = 0; n < rows.size(); ++n) {
            if (n > 0)
                os << '\n';
            for (std::size_t k = 0; k < rows[n].size(); ++k) {
                const auto s = rows[n][k].to_string();
                os << (k > 0 ? " " : "") << std::string(width[k] - s.size(), ' ') << s;
            }
        }
        break;
    }
    }
    return os.str();
}

std::string render(const Triangle& t, Format format)
{
    return render(t.data(), format);
}

}  // namespace riordan
