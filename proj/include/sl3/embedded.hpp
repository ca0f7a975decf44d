#pragma once

namespace sl3::embedded {
const char* structures_json();
const char* sprime_presentation();
}
