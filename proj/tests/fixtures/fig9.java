private BufferedReader fp;
public String getName() {
  String line = fp.readLine();
  int i = line.indexOf(' ');
  return line.substring(0, i);
}
public void show() {
  String name = getName();
  System.out.println(name+"!!");
}
public String getField() {
  String buf = fp.readLine();
  return buf.substring(0, buf.indexOf(':'));
}
public String getColumn() {
  String buf = fp.readLine();
  return buf.substring(0, buf.indexOf(','));
}
