#ifndef SIG4_TOOLS_OUTPUT_HPP
#define SIG4_TOOLS_OUTPUT_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sig4::cli
{

enum class Format { csv, jsonl, human };

// Flat, ordered key -> value map for one computation. Doubles render with
// 17 significant digits so every value parses back to the same bits.
class OutputRecord
{
public:
    using Value = std::variant<double, long long, std::string>;

    OutputRecord &add(std::string key, Value value)
    {
        fields_.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    const std::vector<std::pair<std::string, Value>> &fields() const noexcept
    {
        return fields_;
    }

private:
    std::vector<std::pair<std::string, Value>> fields_;
};

std::string format_value(const OutputRecord::Value &v);

// Streams records in one format. CSV emits the header from the first record;
// later records are expected to carry the same keys.
class RecordWriter
{
public:
    RecordWriter(std::ostream &os, Format format) : os_(os), format_(format) {}
    void write(const OutputRecord &rec);

private:
    std::ostream &os_;
    Format format_;
    bool header_done_ = false;
};

} // namespace sig4::cli

#endif
