import io

def to_unicode(s):
    if not isinstance(s, bytes):
        return s
    try:
        return s.decode('utf8')
    except UnicodeDecodeError:
        return s.decode('latin-1')

def read_text(path):
    with open(path, 'rb') as f:
        return to_unicode(f.read())

def write_text(path, text):
    with io.open(path, 'w', encoding='utf8', newline='\n') as f:
        f.write(text)
