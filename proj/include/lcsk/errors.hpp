#pragma once

#include <stdexcept>
#include <string>

namespace lcsk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dataset ingestion
class MissingFileError : public Error {
public:
    using Error::Error;
};
class MalformedLineError : public Error {
public:
    using Error::Error;
};
class InconsistentEdgeLabelsError : public Error {
public:
    using Error::Error;
};

// Serialization
class MissingEdgeLabelError : public Error {
public:
    using Error::Error;
};

// Metric / representation
class EmptySequenceError : public Error {
public:
    using Error::Error;
};
class EmptyRepresentationError : public Error {
public:
    using Error::Error;
};

// Optimal transport
class EmptyMeasureError : public Error {
public:
    using Error::Error;
};
class BadMarginalsError : public Error {
public:
    using Error::Error;
};
class TooLargeError : public Error {
public:
    using Error::Error;
};

// Classification
class SingleClassError : public Error {
public:
    using Error::Error;
};

// CLI / configuration
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace lcsk
