#ifndef HAMSPAN_REPORT_HPP
#define HAMSPAN_REPORT_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hamspan {

enum class Status { Pass, Fail, Finding, Skip };
enum class Provenance { Paper, Trivial, Derived };

inline const char* status_name(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Finding: return "finding";
    case Status::Skip: return "skip";
    }
    return "?";
}

inline const char* provenance_name(Provenance p)
{
    switch (p) {
    case Provenance::Paper: return "paper";
    case Provenance::Trivial: return "trivial";
    case Provenance::Derived: return "derived";
    }
    return "?";
}

using Value = std::variant<bool, std::int64_t, std::string, std::vector<std::int64_t>, std::vector<std::string>>;

inline Value to_value(bool b) { return b; }
inline Value to_value(int v) { return static_cast<std::int64_t>(v); }
inline Value to_value(long v) { return static_cast<std::int64_t>(v); }
inline Value to_value(long long v) { return static_cast<std::int64_t>(v); }
inline Value to_value(unsigned long v) { return static_cast<std::int64_t>(v); }
inline Value to_value(unsigned long long v) { return static_cast<std::int64_t>(v); }
inline Value to_value(const char* s) { return std::string(s); }
inline Value to_value(std::string s) { return s; }
inline Value to_value(std::vector<std::string> v) { return v; }
template <typename Int>
Value to_value(const std::vector<Int>& v)
{
    std::vector<std::int64_t> out(v.begin(), v.end());
    return out;
}

inline std::string value_text(const Value& v)
{
    struct Visitor {
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(const std::vector<std::int64_t>& xs) const
        {
            std::string s = "[";
            for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
            return s + "]";
        }
        std::string operator()(const std::vector<std::string>& xs) const
        {
            std::string s = "[";
            for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
            return s + "]";
        }
    };
    return std::visit(Visitor{}, v);
}

struct Expected {
    Value value;
    Provenance provenance;
};

// Structured outcome of one named check. Mismatches recorded through expect()
// turn the status to Fail and leave a diff note behind.
struct VerificationReport {
    std::string check_id;
    Status status = Status::Pass;
    std::vector<std::pair<std::string, Value>> computed;
    std::vector<std::pair<std::string, Expected>> expected;
    std::vector<std::string> notes;
    double elapsed = 0.0;

    VerificationReport() = default;
    explicit VerificationReport(std::string id) : check_id(std::move(id)) {}

    template <typename T>
    void record(const std::string& key, T&& v)
    {
        computed.emplace_back(key, to_value(std::forward<T>(v)));
    }

    template <typename T, typename U>
    bool expect(const std::string& key, T&& got, U&& want, Provenance p)
    {
        Value g = to_value(std::forward<T>(got));
        Value w = to_value(std::forward<U>(want));
        const bool ok = g == w;
        computed.emplace_back(key, g);
        expected.emplace_back(key, Expected{w, p});
        if (!ok) {
            fail("mismatch in " + key + ": computed " + value_text(g) + ", expected " + value_text(w));
        }
        return ok;
    }

    // Like expect(), but a mismatch against a claim already known to be wrong
    // becomes a finding that carries `note`.
    template <typename T, typename U>
    bool observe(const std::string& key, T&& got, U&& want, Provenance p, const std::string& note)
    {
        Value g = to_value(std::forward<T>(got));
        Value w = to_value(std::forward<U>(want));
        const bool ok = g == w;
        computed.emplace_back(key, g);
        expected.emplace_back(key, Expected{w, p});
        if (!ok) finding(key + ": computed " + value_text(g) + ", expected " + value_text(w) + "; " + note);
        return ok;
    }

    void fail(const std::string& note)
    {
        status = Status::Fail;
        notes.push_back(note);
    }

    // Non-refuting data worth surfacing; never overrides a failure.
    void finding(const std::string& note)
    {
        if (status == Status::Pass) status = Status::Finding;
        notes.push_back(note);
    }

    void skip(const std::string& reason)
    {
        status = Status::Skip;
        notes.push_back(reason);
    }

    bool ok() const { return status == Status::Pass || status == Status::Finding; }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace hamspan

#endif // HAMSPAN_REPORT_HPP
