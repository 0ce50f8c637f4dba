#include "json_writer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "ellcauchy/errors.hpp"

namespace ellcauchy::cli
{

namespace
{

void write_number(std::ostream &out, double value)
{
    if (!std::isfinite(value)) {
        throw RangeError("refusing to serialize a non-finite number");
    }
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    out << buffer;
}

bool is_scalar_array(const Json &value)
{
    return value.is_array() && std::none_of(value.begin(), value.end(), [](const Json &v) { return v.is_structured(); });
}

// Scalars and arrays of scalars (complex pairs, index lists) only.
bool is_flat(const Json &value)
{
    return std::all_of(value.begin(), value.end(),
                       [](const Json &v) { return !v.is_structured() || is_scalar_array(v); });
}

void write_value(std::ostream &out, const Json &value, int indent, int depth)
{
    const auto newline = [&](int level) {
        out << '\n' << std::string(static_cast<std::size_t>(indent * level), ' ');
    };
    switch (value.type()) {
    case Json::value_t::object: {
        if (value.empty()) {
            out << "{}";
            return;
        }
        out << '{';
        bool first = true;
        for (const auto &item : value.items()) {
            out << (first ? "" : ",");
            first = false;
            newline(depth + 1);
            out << Json(item.key()).dump() << ": ";
            write_value(out, item.value(), indent, depth + 1);
        }
        newline(depth);
        out << '}';
        return;
    }
    case Json::value_t::array: {
        // A matrix row of complex pairs stays on one line.
        if (value.empty() || is_flat(value)) {
            out << '[';
            for (std::size_t k = 0; k < value.size(); ++k) {
                out << (k == 0 ? "" : ", ");
                write_value(out, value[k], indent, depth + 1);
            }
            out << ']';
            return;
        }
        out << '[';
        for (std::size_t k = 0; k < value.size(); ++k) {
            out << (k == 0 ? "" : ",");
            newline(depth + 1);
            write_value(out, value[k], indent, depth + 1);
        }
        newline(depth);
        out << ']';
        return;
    }
    case Json::value_t::number_float:
        write_number(out, value.get<double>());
        return;
    default:
        out << value.dump();
        return;
    }
}

} // namespace

void write_json(std::ostream &out, const Json &value, int indent)
{
    write_value(out, value, indent, 0);
    out << '\n';
}

} // namespace ellcauchy::cli
