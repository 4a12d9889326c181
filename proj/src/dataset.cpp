#include "changekit/dataset.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <iterator>
#include <unordered_set>

namespace changekit {

namespace {

constexpr std::array<std::string_view, 3> kRequiredColumns{"label", "past", "present"};
constexpr std::array<std::string_view, 4> kReportColumns{"abs", "rel", "indicator", "rank"};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

double parse_value(std::string_view text, const std::string& label, const char* column) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw ValidationError(label, column, "not a finite number: '" + std::string(text) + "'");
    }
    if (value <= 0.0) throw ValidationError(label, column, "must be > 0");
    return value;
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_number) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c != '"') {
                field += c;
            } else if (i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else {
                quoted = false;
            }
        } else if (c == '"' && trim(field).empty()) {
            quoted = true;
            was_quoted = true;
            field.clear();
        } else if (c == ',') {
            fields.push_back(was_quoted ? field : std::string(trim(field)));
            field.clear();
            was_quoted = false;
        } else if (!was_quoted) {
            field += c;
        } else if (c != ' ' && c != '\t') {
            throw ParseError(line_number, "unexpected text after closing quote");
        }
    }
    if (quoted) throw ParseError(line_number, "unterminated quoted field");
    fields.push_back(was_quoted ? field : std::string(trim(field)));
    return fields;
}

std::string quote_csv_field(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

Dataset parse_csv(std::string_view text, std::string source) {
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    Dataset ds;
    ds.source = std::move(source);
    std::unordered_set<std::string> seen;
    std::size_t columns = 0;
    std::size_t line_number = 0;
    bool have_header = false;

    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) continue;

        const std::vector<std::string> fields = split_csv_line(line, line_number);
        if (!have_header) {
            if (fields.size() < kRequiredColumns.size()) {
                throw ParseError(line_number, "expected header label,past,present");
            }
            for (std::size_t i = 0; i < fields.size(); ++i) {
                const std::string name = lower(fields[i]);
                if (i < kRequiredColumns.size()) {
                    if (name != kRequiredColumns[i]) {
                        throw ParseError(line_number, "expected header label,past,present, found column '" +
                                                          fields[i] + "'");
                    }
                } else if (std::find(kReportColumns.begin(), kReportColumns.end(), name) == kReportColumns.end()) {
                    throw ParseError(line_number, "unknown column '" + fields[i] + "'");
                }
            }
            columns = fields.size();
            have_header = true;
            continue;
        }

        if (fields.size() != columns) {
            throw ParseError(line_number, "expected " + std::to_string(columns) + " fields, found " +
                                              std::to_string(fields.size()));
        }
        const std::string& label = fields[0];
        if (label.empty()) {
            throw ValidationError("", "label", "empty label on line " + std::to_string(line_number));
        }
        const double past = parse_value(fields[1], label, "past");
        const double present = parse_value(fields[2], label, "present");
        if (!seen.insert(label).second) throw ValidationError(label, "label", "duplicate label");
        ds.observations.push_back({label, PositivePair(past, present)});
    }

    if (!have_header) throw ParseError(std::max<std::size_t>(line_number, 1), "missing header label,past,present");
    if (ds.observations.empty()) throw ParseError(line_number, "no observations");
    return ds;
}

Dataset parse_csv(std::istream& in, std::string source) {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_csv(std::string_view(text), std::move(source));
}

}  // namespace changekit
