#include "psl4cd/report.hpp"

namespace psl4cd {

std::string status_name(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
  }
  return "";
}

}  // namespace psl4cd
