#pragma once

#include <stdexcept>
#include <string>

namespace pps {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph construction
struct InvalidEdge : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct VertexOutOfRange : Error { using Error::Error; };
struct RecipeInvalid : Error { using Error::Error; };

// graph6 codec
struct MalformedHeader : Error { using Error::Error; };
struct TruncatedBody : Error { using Error::Error; };
struct InvalidCharacter : Error { using Error::Error; };
struct SizeUnsupported : Error { using Error::Error; };

// linear algebra
struct MatrixShapeError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };

// verification harness
struct SizeLimit : Error { using Error::Error; };

// text input
struct ParseError : Error { using Error::Error; };

} // namespace pps
