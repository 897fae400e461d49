#ifndef RADOCERT_CERTIFICATE_HPP
#define RADOCERT_CERTIFICATE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include <radocert/coloring.hpp>
#include <radocert/errors.hpp>
#include <radocert/linear_rado.hpp>
#include <radocert/reductions.hpp>
#include <radocert/syntax.hpp>
#include <radocert/window_search.hpp>

namespace radocert {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCertificateFormat = "radocert-certificate";
inline constexpr int kCertificateSchemaVersion = 1;

// Thrown for documents that are not certificates of a supported version.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Structured-text encodings. Ring elements always use the element syntax of
// the certificate's domain.
Json poly_to_json(const NamedPoly& p);
NamedPoly poly_from_json(const Domain& domain, const Json& j);
Json matrix_to_json(const LinearSystem& a);
LinearSystem matrix_from_json(const Domain& domain, const Json& j);
Json window_to_json(const Window& w);
Window window_from_json(const Domain& domain, const Json& j);
// Cells are written with 1-based column numbers.
Json witness_to_json(const Domain& domain, const ColumnsWitness& w);
ColumnsWitness witness_from_json(const Domain& domain, const Json& j);
Json window_certificate_to_json(const WindowCertificate& c);
WindowCertificate window_certificate_from_json(const Domain& domain, const Json& j);

// Starts a certificate document: header, command echo and domain.
Json make_certificate(const std::vector<std::string>& command, const Domain& domain);
// SHA-256 over the canonical dump of every field except "digest" and
// "elapsed_ms".
std::string certificate_digest(const Json& cert);
// Stores the digest; call once the document is complete.
void seal_certificate(Json& cert);

struct Verification {
  bool ok = false;
  std::string reason;  // why verification failed, or a summary when it passed
};

// Re-checks a certificate without repeating the search that produced it:
// witness equations, monochromatic-edge scans and avoider edge checks.
// Verdicts that assert a search came up empty (PartitionCertified,
// DensityCertified, no columns condition) are re-derived on the recorded
// window only. Throws SchemaError for unsupported documents.
Verification verify_certificate(const Json& cert);

}  // namespace radocert

#endif
