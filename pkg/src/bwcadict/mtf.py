"""Move-to-front coding over the full byte alphabet.

Both directions start from the identity recency list 0, 1, ..., 255.
"""


def mtf_encode(data: bytes) -> bytes:
    recency = list(range(256))
    out = bytearray(len(data))
    for i, byte in enumerate(data):
        pos = recency.index(byte)
        out[i] = pos
        if pos:
            del recency[pos]
            recency.insert(0, byte)
    return bytes(out)


def mtf_decode(data: bytes) -> bytes:
    recency = list(range(256))
    out = bytearray(len(data))
    for i, pos in enumerate(data):
        byte = recency[pos]
        out[i] = byte
        if pos:
            del recency[pos]
            recency.insert(0, byte)
    return bytes(out)
