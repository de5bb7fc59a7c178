pub fn _placeholder_sato() {}
