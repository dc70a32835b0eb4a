#pragma once

// Hand-built pairing-matrix samples exercising every clause of the row
// conditions, shared by the unit and acceptance suites.
//
//   sample 1: the strong row condition holds on every row
//   samples 2-4: the weak row condition holds on every row
//   sample 5: rows 1 and 3 break even the weak condition
namespace fixtures {

inline const char* kSample1 =
    "0 -1 0 0 0;"
    "0 0 2 -1 2;"
    "0 0 0 0 0;"
    "0 0 0 0 -1;"
    "0 0 0 0 0";

inline const char* kSample2 =
    "0 -1 0 -1 0;"
    "0 0 0 -2 0;"
    "0 0 0 0 -1;"
    "0 0 0 0 -2;"
    "0 0 0 0 0";

inline const char* kSample3 =
    "0 2 -1 2 -1 2;"
    "0 0 2 -1 2 0;"
    "0 0 0 0 -2 0;"
    "0 0 0 0 -1 -1;"
    "0 0 0 0 0 -1;"
    "0 0 0 0 0 0";

inline const char* kSample4 =
    "0 2 -1 -1 2;"
    "0 0 2 -2 2;"
    "0 0 0 -1 0;"
    "0 0 0 0 -1;"
    "0 0 0 0 0";

inline const char* kSample5 =
    "0 -1 -1 -1 0;"
    "0 0 -1 0 -1;"
    "0 0 0 0 -3;"
    "0 0 0 0 -2;"
    "0 0 0 0 0";

}  // namespace fixtures
