#include "vlr/hydro.hpp"
