#ifndef SELORB_EXACT_ERRORS_HPP
#define SELORB_EXACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace selorb {

/* Error kinds map one-to-one onto CLI exit codes (see tools/selorb.cpp). */
enum class error_kind { validation = 2, infeasible = 3, unsupported = 4 };

class error : public std::runtime_error {
  public:
    error(error_kind k, const std::string &what)
        : std::runtime_error(what), kind_(k) {}
    error_kind kind() const { return kind_; }
    int exit_code() const { return static_cast<int>(kind_); }

  private:
    error_kind kind_;
};

struct validation_error : error {
    explicit validation_error(const std::string &w)
        : error(error_kind::validation, w) {}
};

struct infeasible_error : error {
    explicit infeasible_error(const std::string &w)
        : error(error_kind::infeasible, w) {}
};

struct unsupported_error : error {
    explicit unsupported_error(const std::string &w)
        : error(error_kind::unsupported, w) {}
};

/* precision too low for a requested p-adic certificate */
struct precision_error : error {
    explicit precision_error(const std::string &w)
        : error(error_kind::infeasible, w) {}
};

inline void require(bool cond, const std::string &msg)
{
    if (!cond)
        throw validation_error(msg);
}

} // namespace selorb

#endif
