#pragma once

#include <string>
#include <vector>

namespace hmeans {

/// %.17g — round-trips every binary64 and keeps output byte-stable.
std::string format_double(double v);

/// Minimal deterministic JSON emitter: insertion-ordered keys, doubles at 17
/// significant digits, no whitespace surprises. (Parsing, where tests need
/// it, goes through a real JSON library.)
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array(const std::string& key);
    JsonWriter& begin_array();  ///< array element that is itself an array
    JsonWriter& end_array();
    JsonWriter& begin_object(const std::string& key);
    JsonWriter& begin_object_element();

    JsonWriter& field(const std::string& key, const std::string& value);
    JsonWriter& field(const std::string& key, const char* value);
    JsonWriter& field(const std::string& key, double value);
    JsonWriter& field(const std::string& key, long long value);
    JsonWriter& field(const std::string& key, int value);
    JsonWriter& field(const std::string& key, bool value);
    JsonWriter& element(double value);
    JsonWriter& element(const std::string& value);

    std::string str() const { return out_; }

private:
    void comma();
    void raw_key(const std::string& key);
    std::string out_;
    std::vector<bool> first_in_scope_;
};

std::string json_escape(const std::string& s);

/// CSV with a header row, comma separators, '.' decimal point, LF endings.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    std::string str() const { return out_; }

private:
    std::string out_;
    std::size_t width_;
};

} // namespace hmeans
