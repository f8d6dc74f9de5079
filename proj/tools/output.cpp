#include "output.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace sig4::cli
{

std::string format_value(const OutputRecord::Value &v)
{
    if (const auto *d = std::get_if<double>(&v)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", *d);
        return buf;
    }
    if (const auto *i = std::get_if<long long>(&v)) {
        return std::to_string(*i);
    }
    return std::get<std::string>(v);
}

void RecordWriter::write(const OutputRecord &rec)
{
    const auto &fields = rec.fields();
    switch (format_) {
        case Format::csv: {
            if (!header_done_) {
                for (std::size_t i = 0; i < fields.size(); ++i) {
                    os_ << (i ? "," : "") << fields[i].first;
                }
                os_ << '\n';
                header_done_ = true;
            }
            for (std::size_t i = 0; i < fields.size(); ++i) {
                os_ << (i ? "," : "") << format_value(fields[i].second);
            }
            os_ << '\n';
            break;
        }
        case Format::jsonl: {
            os_ << '{';
            for (std::size_t i = 0; i < fields.size(); ++i) {
                os_ << (i ? "," : "") << nlohmann::json(fields[i].first).dump() << ':';
                const auto &v = fields[i].second;
                if (std::holds_alternative<std::string>(v)) {
                    os_ << nlohmann::json(std::get<std::string>(v)).dump();
                } else {
                    os_ << format_value(v);
                }
            }
            os_ << "}\n";
            break;
        }
        case Format::human: {
            std::size_t width = 0;
            for (const auto &f : fields) {
                width = std::max(width, f.first.size());
            }
            for (const auto &[key, value] : fields) {
                os_ << key << std::string(width - key.size(), ' ') << " = " << format_value(value) << '\n';
            }
            os_ << '\n';
            break;
        }
    }
}

} // namespace sig4::cli
