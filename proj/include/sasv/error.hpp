#pragma once

#include <stdexcept>
#include <string>

namespace sasv {

// Every error raised by the library carries a stable name (used by the CLI
// diagnostics and by the Python binding) and belongs to one of two families:
// input errors (bad files, bad configs) and metric-domain errors.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }
    virtual bool is_input_error() const noexcept = 0;

private:
    std::string name_;
};

class InputError : public Error {
public:
    using Error::Error;
    bool is_input_error() const noexcept override { return true; }
};

class MetricError : public Error {
public:
    using Error::Error;
    bool is_input_error() const noexcept override { return false; }
};

#define SASV_DEFINE_ERROR(Name, Base)                                        \
    class Name : public Base {                                               \
    public:                                                                  \
        explicit Name(const std::string& what) : Base(#Name, what) {}        \
    };

// Input / validation errors.
SASV_DEFINE_ERROR(ParseError, InputError)
SASV_DEFINE_ERROR(InvalidScoreError, InputError)
SASV_DEFINE_ERROR(PriorSumError, InputError)
SASV_DEFINE_ERROR(NegativeValueError, InputError)
SASV_DEFINE_ERROR(AllZeroCostError, InputError)
SASV_DEFINE_ERROR(MissingScoreError, InputError)
SASV_DEFINE_ERROR(UnknownTrialError, InputError)
SASV_DEFINE_ERROR(DuplicateTrialError, InputError)
SASV_DEFINE_ERROR(InvalidDistributionError, InputError)

// Metric-domain errors.
SASV_DEFINE_ERROR(EmptyClassError, MetricError)
SASV_DEFINE_ERROR(DegenerateModelError, MetricError)
SASV_DEFINE_ERROR(RangeError, MetricError)
SASV_DEFINE_ERROR(ZeroClassCountError, MetricError)
SASV_DEFINE_ERROR(CountMismatchError, MetricError)
SASV_DEFINE_ERROR(DimensionMismatchError, MetricError)

#undef SASV_DEFINE_ERROR

} // namespace sasv
