pub fn _placeholder_kp() {}
