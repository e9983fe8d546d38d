#pragma once

namespace permlab::embedded {

extern const char* const closed_forms;
extern const char* const table2;

}  // namespace permlab::embedded
