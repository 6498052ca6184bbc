namespace quatinv {
}
