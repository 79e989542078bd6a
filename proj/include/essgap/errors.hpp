#pragma once

#include <stdexcept>
#include <string>

namespace essgap
{

/* root of all toolkit errors; `kind()` is the machine-readable tag the CLI reports */
class error : public std::runtime_error
{
public:
  error( std::string kind, const std::string& what ) : std::runtime_error( what ), kind_( std::move( kind ) ) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

struct dimension_error : error
{
  explicit dimension_error( const std::string& what ) : error( "dimension", what ) {}
};

/* a construction or table would exceed the variable cap */
struct cap_error : error
{
  explicit cap_error( const std::string& what ) : error( "cap", what ) {}
};

struct infeasible_error : error
{
  explicit infeasible_error( const std::string& what ) : error( "infeasible", what ) {}
};

/* an exact search gave up after its node budget */
struct work_limit_error : error
{
  explicit work_limit_error( const std::string& what ) : error( "work_limit", what ) {}
};

struct input_error : error
{
  explicit input_error( const std::string& what ) : error( "input", what ) {}
};

} // namespace essgap
