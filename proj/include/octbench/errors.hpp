#pragma once

#include <stdexcept>
#include <string>

namespace octbench {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- IO / decoding --------------------------------------------------------
struct FileNotFoundError : Error { using Error::Error; };
struct DecodeError       : Error { using Error::Error; };
struct IoError           : Error { using Error::Error; };

// -- geometry -------------------------------------------------------------
struct InvalidDimensionsError : Error { using Error::Error; };
struct OutOfBoundsError       : Error { using Error::Error; };
struct DimMismatchError       : Error { using Error::Error; };

// -- manifest / dataset ----------------------------------------------------
struct MissingColumnError     : Error { using Error::Error; };
struct DuplicateSampleIdError : Error { using Error::Error; };
struct SplitLeakError         : Error { using Error::Error; };
struct EmptyManifestError     : Error { using Error::Error; };
struct UnknownSampleError     : Error { using Error::Error; };
struct MissingFrameError      : Error {
    int frame_index;
    MissingFrameError(const std::string& msg, int k) : Error(msg), frame_index(k) {}
};

// -- preprocess ------------------------------------------------------------
struct NoForegroundError     : Error { using Error::Error; };
struct RegionSpansWidthError : Error { using Error::Error; };
struct InvalidRangeError     : Error { using Error::Error; };
struct InvalidFractionError  : Error { using Error::Error; };
struct InvalidDirectionError : Error { using Error::Error; };
struct WrongInputSizeError   : Error { using Error::Error; };

// -- metrics ----------------------------------------------------------------
struct TooSmallError        : Error { using Error::Error; };
struct TooFewSamplesError   : Error { using Error::Error; };
struct NumericalFailure     : Error { using Error::Error; };
struct ParseError           : Error { using Error::Error; };
struct InconsistentDimError : Error { using Error::Error; };

// -- baselines / harness -----------------------------------------------------
struct InvalidStepsError           : Error { using Error::Error; };
struct InvalidScaleError           : Error { using Error::Error; };
struct DuplicateSubmissionIdError  : Error { using Error::Error; };
struct EmptyInputError             : Error { using Error::Error; };

}  // namespace octbench
