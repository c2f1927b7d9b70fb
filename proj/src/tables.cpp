#include "mp/tables.hpp"
