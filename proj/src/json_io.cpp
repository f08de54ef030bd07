#include "wsi/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace wsi::io {

namespace {

void write(const Json& j, std::string& out, int depth) {
    const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
    const std::string close_pad(2 * static_cast<std::size_t>(depth), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out += pad + Json(it.key()).dump() + ": ";
                write(it.value(), out, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i > 0) {
                    out += ",\n";
                }
                out += pad;
                write(j[i], out, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_number(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

Json complex_json(std::complex<double> z) {
    Json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "null";
    }
    if (std::isinf(x)) {
        return x > 0 ? "1e999" : "-1e999";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string dump(const Json& doc) {
    std::string out;
    write(doc, out, 0);
    out += "\n";
    return out;
}

}  // namespace wsi::io
